#include "sinr/interference.hpp"

#include <cmath>
#include <stdexcept>

namespace sinr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const Link& resolve(const LinkInstance& inst, std::int64_t id) {
  return inst.link_by_id(id);
}

}  // namespace

const char* power_kind_name(PowerKind k) {
  switch (k) {
    case PowerKind::Uniform: return "uniform";
    case PowerKind::Mean: return "mean";
    case PowerKind::Linear: return "linear";
    case PowerKind::Explicit: return "explicit";
  }
  return "?";
}

double power_of(const PowerAssignment& pa, const Link& v, double alpha) {
  switch (pa.kind) {
    case PowerKind::Uniform: return pa.scale;
    case PowerKind::Mean: return pa.scale * std::pow(link_length(v), alpha / 2.0);
    case PowerKind::Linear: return pa.scale * std::pow(link_length(v), alpha);
    case PowerKind::Explicit: {
      auto it = pa.explicit_powers.find(v.id);
      if (it == pa.explicit_powers.end())
        throw std::invalid_argument("no explicit power for link " + std::to_string(v.id));
      return it->second;
    }
  }
  throw std::logic_error("unreachable power kind");
}

double affectance(const LinkInstance& inst, const PowerAssignment& pa, const Link& w,
                  const Link& v) {
  if (w.id == v.id) throw std::invalid_argument("affectance requires two distinct links");
  double d = asym_distance(inst, w, v);
  if (d == 0.0) return kInf;
  double pw = power_of(pa, w, inst.alpha);
  double pv = power_of(pa, v, inst.alpha);
  return (pw / pv) * std::pow(link_length(v) / d, inst.alpha);
}

double slot_affectance(const LinkInstance& inst, const PowerAssignment& pa,
                       const std::vector<std::int64_t>& slot, std::int64_t v) {
  const Link& lv = resolve(inst, v);
  double sum = 0.0;
  for (std::int64_t wid : slot) {
    if (wid == v) continue;
    sum += affectance(inst, pa, resolve(inst, wid), lv);
  }
  return sum;
}

bool is_sinr_feasible(const LinkInstance& inst, const PowerAssignment& pa,
                      const std::vector<std::int64_t>& slot) {
  if (slot.empty()) throw std::invalid_argument("feasibility of an empty slot is undefined");
  for (std::int64_t vid : slot) {
    const Link& v = resolve(inst, vid);
    double signal = power_of(pa, v, inst.alpha) / std::pow(link_length(v), inst.alpha);
    double interference = 0.0;
    for (std::int64_t wid : slot) {
      if (wid == vid) continue;
      const Link& w = resolve(inst, wid);
      double d = asym_distance(inst, w, v);
      if (d == 0.0) return false;
      interference += power_of(pa, w, inst.alpha) / std::pow(d, inst.alpha);
    }
    bool ok = inst.noise == 0.0 ? signal > inst.beta * interference
                                : signal >= inst.beta * (interference + inst.noise);
    if (!ok) return false;
  }
  return true;
}

SignalReport signal_level(const LinkInstance& inst, const PowerAssignment& pa,
                          const std::vector<std::vector<std::int64_t>>& slots) {
  SignalReport rep;
  for (const auto& slot : slots) {
    for (std::int64_t vid : slot) {
      double a = slot_affectance(inst, pa, slot, vid);
      if (a > rep.worst_affectance) {
        rep.worst_affectance = a;
        rep.worst_link = vid;
      }
    }
  }
  if (rep.worst_affectance == 0.0) {
    rep.signal_level = kInf;
  } else if (rep.worst_affectance == kInf) {
    rep.signal_level = 0.0;
  } else {
    rep.signal_level = 1.0 / rep.worst_affectance;
  }
  return rep;
}

bool is_p_signal(const LinkInstance& inst, const PowerAssignment& pa,
                 const std::vector<std::vector<std::int64_t>>& slots, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("signal level p must be positive");
  return signal_level(inst, pa, slots).worst_affectance < 1.0 / p;
}

bool noise_power_ok(const LinkInstance& inst, const PowerAssignment& pa) {
  for (const Link& v : inst.links) {
    double signal = power_of(pa, v, inst.alpha) / std::pow(link_length(v), inst.alpha);
    if (!(signal >= 2.0 * inst.beta * inst.noise)) return false;
  }
  return true;
}

}  // namespace sinr
