#include "sinr/io.hpp"

#include <fstream>
#include <stdexcept>

namespace sinr {

namespace {

ModelKind model_from_string(const std::string& s) {
  if (s == "directed") return ModelKind::Directed;
  if (s == "bidirectional") return ModelKind::Bidirectional;
  throw std::invalid_argument("unknown model '" + s + "'");
}

LengthDist dist_from_string(const std::string& s) {
  if (s == "fixed") return LengthDist::Fixed;
  if (s == "uniform") return LengthDist::Uniform;
  if (s == "lambda") return LengthDist::LambdaTarget;
  throw std::invalid_argument("unknown length distribution '" + s + "'");
}

}  // namespace

json instance_to_json(const LinkInstance& inst) {
  json links = json::array();
  for (const Link& v : inst.links) {
    links.push_back({{"id", v.id},
                     {"sx", v.sender.x},
                     {"sy", v.sender.y},
                     {"rx", v.receiver.x},
                     {"ry", v.receiver.y}});
  }
  return {{"alpha", inst.alpha},
          {"beta", inst.beta},
          {"noise", inst.noise},
          {"model", model_name(inst.model)},
          {"links", links}};
}

LinkInstance instance_from_json(const json& j) {
  LinkInstance inst;
  inst.alpha = j.at("alpha").get<double>();
  inst.beta = j.at("beta").get<double>();
  inst.noise = j.at("noise").get<double>();
  inst.model = model_from_string(j.at("model").get<std::string>());
  for (const json& lj : j.at("links")) {
    Link v;
    v.id = lj.at("id").get<std::int64_t>();
    v.sender = {lj.at("sx").get<double>(), lj.at("sy").get<double>()};
    v.receiver = {lj.at("rx").get<double>(), lj.at("ry").get<double>()};
    inst.links.push_back(v);
  }
  return inst;
}

json power_to_json(const PowerAssignment& pa) {
  json j = {{"kind", power_kind_name(pa.kind)}, {"c", pa.scale}};
  if (pa.kind == PowerKind::Explicit) {
    json powers = json::object();
    for (const auto& [id, p] : pa.explicit_powers) powers[std::to_string(id)] = p;
    j["powers"] = powers;
  }
  return j;
}

PowerAssignment power_from_json(const json& j) {
  PowerAssignment pa;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform") pa.kind = PowerKind::Uniform;
  else if (kind == "mean") pa.kind = PowerKind::Mean;
  else if (kind == "linear") pa.kind = PowerKind::Linear;
  else if (kind == "explicit") pa.kind = PowerKind::Explicit;
  else throw std::invalid_argument("unknown power kind '" + kind + "'");
  pa.scale = j.value("c", 1.0);
  if (pa.kind == PowerKind::Explicit) {
    for (const auto& [key, val] : j.at("powers").items())
      pa.explicit_powers[std::stoll(key)] = val.get<double>();
  }
  return pa;
}

json schedule_to_json(const Schedule& sched) {
  return {{"power", power_to_json(sched.power)}, {"slots", sched.slots}};
}

Schedule schedule_from_json(const json& j) {
  Schedule s;
  s.power = power_from_json(j.at("power"));
  for (const json& slot : j.at("slots"))
    s.slots.push_back(slot.get<std::vector<std::int64_t>>());
  return s;
}

json report_to_json(const ScheduleReport& rep) {
  json j = {{"slot_count", rep.slot_count},
            {"feasible", rep.feasible},
            {"worst_affectance", rep.worst_affectance},
            {"signal_level", rep.signal_level},  // infinity serializes as null
            {"worst_link", rep.worst_link},
            {"lambda", rep.lambda},
            {"covered", rep.covered},
            {"instance_n", rep.instance_n},
            {"slot_boundedness", rep.slot_boundedness},
            {"violations", rep.violations}};
  if (rep.ratio_vs_fixed_opt) j["ratio_vs_fixed_opt"] = *rep.ratio_vs_fixed_opt;
  if (rep.ratio_vs_pc_opt) j["ratio_vs_pc_opt"] = *rep.ratio_vs_pc_opt;
  return j;
}

json generator_spec_to_json(const GeneratorSpec& spec) {
  json length;
  switch (spec.dist) {
    case LengthDist::Fixed:
      length = {{"dist", "fixed"}, {"value", spec.length}};
      break;
    case LengthDist::Uniform:
      length = {{"dist", "uniform"}, {"min", spec.length_min}, {"max", spec.length_max}};
      break;
    case LengthDist::LambdaTarget:
      length = {{"dist", "lambda"}, {"target", spec.lambda_target}, {"base", spec.length}};
      break;
  }
  return {{"n", spec.n},
          {"seed", spec.seed},
          {"area_side", spec.area_side},
          {"model", model_name(spec.model)},
          {"alpha", spec.alpha},
          {"beta", spec.beta},
          {"noise", spec.noise},
          {"length", length}};
}

GeneratorSpec generator_spec_from_json(const json& j) {
  GeneratorSpec spec;
  spec.n = j.at("n").get<std::size_t>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.area_side = j.value("area_side", 100.0);
  spec.model = model_from_string(j.value("model", "directed"));
  spec.alpha = j.value("alpha", 3.0);
  spec.beta = j.value("beta", 1.0);
  spec.noise = j.value("noise", 0.0);
  const json& length = j.at("length");
  spec.dist = dist_from_string(length.at("dist").get<std::string>());
  switch (spec.dist) {
    case LengthDist::Fixed:
      spec.length = length.at("value").get<double>();
      break;
    case LengthDist::Uniform:
      spec.length_min = length.at("min").get<double>();
      spec.length_max = length.at("max").get<double>();
      break;
    case LengthDist::LambdaTarget:
      spec.lambda_target = length.at("target").get<double>();
      spec.length = length.value("base", 1.0);
      break;
  }
  return spec;
}

json alg1_trace_to_json(const Alg1Trace& t) {
  json classes = json::object();
  for (const auto& [i, ids] : t.classes) classes[std::to_string(i)] = ids;
  json buckets = json::object();
  for (const auto& [i, cs] : t.buckets) buckets[std::to_string(i)] = cs;
  json class_slots = json::object();
  for (const auto& [i, k] : t.class_slots) class_slots[std::to_string(i)] = k;
  return {{"universe_n", t.universe_n},
          {"l_min", t.l_min},
          {"f", t.f},
          {"classes", classes},
          {"buckets", buckets},
          {"class_slots", class_slots},
          {"round_slots_opened", t.round_slots_opened},
          {"boundedness", t.boundedness},
          {"nonempty_buckets", t.nonempty_buckets},
          {"max_class_slots", t.max_class_slots},
          {"slots_before_safety", t.slots_before_safety},
          {"safety_extra_slots", t.safety_extra_slots},
          {"beta_refine_applied", t.beta_refine_applied},
          {"final_slots", t.final_slots},
          {"budget", t.budget()}};
}

json pc_trace_to_json(const SchedulePcTrace& t) {
  json traces = json::array();
  for (const Alg1Trace& ct : t.class_traces) traces.push_back(alg1_trace_to_json(ct));
  return {{"q", t.q},
          {"conflict_edges", t.graph.edge_count()},
          {"num_colors", t.coloring.num_colors},
          {"color_classes", t.color_classes},
          {"degenerate_links", t.degenerate_links},
          {"class_traces", traces}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

}  // namespace sinr
