// Command-line front end: composable subcommands with JSON/CSV on files or
// standard streams. Exit codes: 0 success (and feasible, for verify),
// 1 infeasible schedule, 2 input error, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sinr/bench.hpp"
#include "sinr/io.hpp"
#include "sinr/oracle.hpp"
#include "sinr/report.hpp"
#include "sinr/scheduler.hpp"

namespace {

using namespace sinr;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

LinkInstance load_instance(const std::string& path) {
  LinkInstance inst = instance_from_json(load_json_file(path));
  auto violations = validate(inst);
  if (!violations.empty()) {
    std::string msg = "invalid instance " + path + ":";
    for (const auto& v : violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
  return inst;
}

std::size_t oracle_cap(std::size_t fallback) {
  if (const char* env = std::getenv("SCHED_ORACLE_MAXN")) {
    return static_cast<std::size_t>(std::stoul(env));
  }
  return fallback;
}

ModelKind parse_model(const std::string& s) {
  if (s == "directed") return ModelKind::Directed;
  if (s == "bidirectional") return ModelKind::Bidirectional;
  throw CLI::ValidationError("model must be 'directed' or 'bidirectional'");
}

int run(int argc, char** argv) {
  CLI::App app{"SINR link scheduling with the mean power assignment"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  GeneratorSpec spec;
  std::string gen_model = "directed", gen_dist = "fixed", gen_out;
  gen->add_option("--n", spec.n, "Number of links")->required();
  gen->add_option("--seed", spec.seed, "RNG seed");
  gen->add_option("--area", spec.area_side, "Side of the deployment square");
  gen->add_option("--model", gen_model, "directed|bidirectional");
  gen->add_option("--alpha", spec.alpha, "Path-loss exponent (> 2)");
  gen->add_option("--beta", spec.beta, "SINR threshold (>= 1)");
  gen->add_option("--noise", spec.noise, "Ambient noise");
  gen->add_option("--length-dist", gen_dist, "fixed|uniform|lambda");
  gen->add_option("--length", spec.length, "Fixed length / lambda base length");
  gen->add_option("--length-min", spec.length_min, "Uniform minimum");
  gen->add_option("--length-max", spec.length_max, "Uniform maximum");
  gen->add_option("--lambda", spec.lambda_target, "Target length diversity");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // --- schedule ---
  auto* schedule = app.add_subcommand("schedule", "Run the full scheduling pipeline");
  std::string sch_in, sch_out, sch_trace, sch_model_override;
  schedule->add_option("--in", sch_in, "Instance JSON")->required();
  schedule->add_option("--out", sch_out, "Schedule JSON output (default stdout)");
  schedule->add_option("--trace", sch_trace, "Write the execution trace JSON here");
  schedule->add_option("--model-override", sch_model_override,
                       "Schedule under this model instead of the instance's");

  // --- refine ---
  auto* refine_cmd = app.add_subcommand("refine", "Strengthen a schedule's signal level");
  std::string ref_in, ref_sched, ref_out;
  double ref_target = 1.0;
  refine_cmd->add_option("--in", ref_in, "Instance JSON")->required();
  refine_cmd->add_option("--sched", ref_sched, "Schedule JSON")->required();
  refine_cmd->add_option("--p-target", ref_target, "Target signal level")->required();
  refine_cmd->add_option("--out", ref_out, "Output file (default stdout)");

  // --- color ---
  auto* color = app.add_subcommand("color", "Degeneracy coloring of a conflict graph");
  std::string col_in, col_graph, col_export, col_out;
  std::optional<double> col_q;
  color->add_option("--in", col_in, "Instance JSON (build the conflict graph)");
  color->add_option("--q", col_q, "Independence parameter (default 2/3 by model)");
  color->add_option("--graph", col_graph, "Read an edge-list file instead");
  color->add_option("--export-graph", col_export, "Also write the edge list here");
  color->add_option("--out", col_out, "Output file (default stdout)");

  // --- verify ---
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule against an instance");
  std::string ver_in, ver_sched, ver_report;
  verify_cmd->add_option("--in", ver_in, "Instance JSON")->required();
  verify_cmd->add_option("--sched", ver_sched, "Schedule JSON")->required();
  verify_cmd->add_option("--report", ver_report, "Write the report JSON here");

  // --- oracle ---
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact desk-scale baselines");
  std::string ora_in, ora_mode, ora_power = "mean", ora_pa;
  double ora_c = 1.0;
  std::optional<double> ora_q;
  std::size_t ora_cap = 0;
  oracle_cmd->add_option("--in", ora_in, "Instance JSON")->required();
  oracle_cmd->add_option("--mode", ora_mode, "fixed|pc|chromatic")->required();
  oracle_cmd->add_option("--power", ora_power, "fixed mode: uniform|mean|linear");
  oracle_cmd->add_option("--c", ora_c, "Power scale");
  oracle_cmd->add_option("--pa", ora_pa, "Power assignment JSON file (overrides --power)");
  oracle_cmd->add_option("--q", ora_q, "chromatic mode: independence parameter");
  oracle_cmd->add_option("--max-n", ora_cap, "Cap override (also SCHED_ORACLE_MAXN)");

  // --- bench ---
  auto* bench_cmd = app.add_subcommand("bench", "Batch experiments to CSV");
  std::string ben_specs, ben_out;
  int ben_reps = 1;
  bool ben_oracle = false, ben_no_time = false;
  bench_cmd->add_option("--specs", ben_specs, "JSON array of generator specs")->required();
  bench_cmd->add_option("--reps", ben_reps, "Repetitions per spec");
  bench_cmd->add_flag("--oracle", ben_oracle, "Add exact optima and ratios");
  bench_cmd->add_flag("--no-time", ben_no_time, "Omit wall_ms for byte-stable output");
  bench_cmd->add_option("--out", ben_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    spec.model = parse_model(gen_model);
    if (gen_dist == "fixed") spec.dist = LengthDist::Fixed;
    else if (gen_dist == "uniform") spec.dist = LengthDist::Uniform;
    else if (gen_dist == "lambda") spec.dist = LengthDist::LambdaTarget;
    else throw std::invalid_argument("length-dist must be fixed, uniform, or lambda");
    emit(dump_json(instance_to_json(generate(spec))), gen_out);
    return 0;
  }

  if (schedule->parsed()) {
    LinkInstance inst = load_instance(sch_in);
    if (!sch_model_override.empty()) inst.model = parse_model(sch_model_override);
    SchedulePcTrace trace;
    Schedule sched = schedule_pc(inst, sch_trace.empty() ? nullptr : &trace);
    if (inst.noise > 0.0) sched = noise_lift(inst, sched);
    emit(dump_json(schedule_to_json(sched)), sch_out);
    if (!sch_trace.empty()) write_text_file(sch_trace, dump_json(pc_trace_to_json(trace)));
    return 0;
  }

  if (refine_cmd->parsed()) {
    LinkInstance inst = load_instance(ref_in);
    Schedule sched = schedule_from_json(load_json_file(ref_sched));
    emit(dump_json(schedule_to_json(refine(inst, sched, ref_target))), ref_out);
    return 0;
  }

  if (color->parsed()) {
    ConflictGraph g;
    if (!col_graph.empty()) {
      std::ifstream in(col_graph);
      if (!in) throw std::invalid_argument("cannot open " + col_graph);
      g = read_edge_list(in);
    } else if (!col_in.empty()) {
      LinkInstance inst = load_instance(col_in);
      double q = col_q.value_or(inst.model == ModelKind::Bidirectional ? 2.0 : 3.0);
      g = build_conflict_graph(inst, q);
    } else {
      throw std::invalid_argument("color needs --in or --graph");
    }
    if (!col_export.empty()) write_text_file(col_export, write_edge_list(g));
    Coloring c = hochbaum_color(g);
    DegeneracyOrder deg = degeneracy_order(g);
    std::ostringstream out;
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.vertices[a] < g.vertices[b]; });
    for (std::size_t i : order) out << g.vertices[i] << ' ' << c.colors[i] << '\n';
    out << "colors=" << c.num_colors << " delta=" << deg.delta << '\n';
    emit(out.str(), col_out);
    return 0;
  }

  if (verify_cmd->parsed()) {
    LinkInstance inst = load_instance(ver_in);
    Schedule sched = schedule_from_json(load_json_file(ver_sched));
    ScheduleReport rep = verify(inst, sched);
    std::string text = dump_json(report_to_json(rep));
    if (!ver_report.empty()) write_text_file(ver_report, text);
    std::cout << text;
    return rep.feasible ? 0 : 1;
  }

  if (oracle_cmd->parsed()) {
    LinkInstance inst = load_instance(ora_in);
    std::size_t cap = ora_cap > 0 ? ora_cap : oracle_cap(ora_mode == "fixed" ? 12 : 12);
    json result;
    if (ora_mode == "fixed") {
      PowerAssignment pa;
      if (!ora_pa.empty()) {
        pa = power_from_json(load_json_file(ora_pa));
      } else if (ora_power == "uniform") pa = PowerAssignment::uniform(ora_c);
      else if (ora_power == "mean") pa = PowerAssignment::mean(ora_c);
      else if (ora_power == "linear") pa = PowerAssignment::linear(ora_c);
      else throw std::invalid_argument("unknown --power kind '" + ora_power + "'");
      result = {{"mode", "fixed"},
                {"power", power_to_json(pa)},
                {"min_slots", optimal_schedule_fixed(inst, pa, cap)}};
    } else if (ora_mode == "pc") {
      result = {{"mode", "pc"}, {"min_slots", optimal_schedule_pc(inst, cap)}};
    } else if (ora_mode == "chromatic") {
      double q = ora_q.value_or(inst.model == ModelKind::Bidirectional ? 2.0 : 3.0);
      ConflictGraph g = build_conflict_graph(inst, q);
      result = {{"mode", "chromatic"},
                {"q", q},
                {"chromatic_number", chromatic_exact(g, cap)},
                {"hochbaum_colors", hochbaum_color(g).num_colors},
                {"delta", degeneracy_order(g).delta}};
    } else {
      throw std::invalid_argument("mode must be fixed, pc, or chromatic");
    }
    std::cout << dump_json(result);
    return 0;
  }

  if (bench_cmd->parsed()) {
    json specs_json = load_json_file(ben_specs);
    std::vector<GeneratorSpec> specs;
    for (const json& j : specs_json) specs.push_back(generator_spec_from_json(j));
    BenchOptions opt;
    opt.repetitions = ben_reps;
    opt.with_oracle = ben_oracle;
    opt.with_time = !ben_no_time;
    opt.oracle_cap = oracle_cap(opt.oracle_cap);
    emit(bench_csv(specs, opt), ben_out);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sinr::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
