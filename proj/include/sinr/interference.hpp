#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "sinr/geometry.hpp"

namespace sinr {

enum class PowerKind { Uniform, Mean, Linear, Explicit };

const char* power_kind_name(PowerKind k);

/// An oblivious power rule (P_v depends only on the link length), or an
/// explicit per-link table.
///   Uniform: P_v = c      Mean: P_v = c * l_v^(alpha/2)
///   Linear:  P_v = c * l_v^alpha
struct PowerAssignment {
  PowerKind kind = PowerKind::Mean;
  double scale = 1.0;
  std::map<std::int64_t, double> explicit_powers;  // used iff kind == Explicit

  static PowerAssignment uniform(double c = 1.0) { return {PowerKind::Uniform, c, {}}; }
  static PowerAssignment mean(double c = 1.0) { return {PowerKind::Mean, c, {}}; }
  static PowerAssignment linear(double c = 1.0) { return {PowerKind::Linear, c, {}}; }
  static PowerAssignment explicit_table(std::map<std::int64_t, double> powers) {
    return {PowerKind::Explicit, 1.0, std::move(powers)};
  }
};

/// Transmit power of link v. Throws when an explicit table misses v.
double power_of(const PowerAssignment& pa, const Link& v, double alpha);

/// Affectance of link w on link v: (P_w / P_v) * (l_v / d_wv)^alpha.
/// Returns +infinity when d_wv = 0; requires v != w.
double affectance(const LinkInstance& inst, const PowerAssignment& pa, const Link& w,
                  const Link& v);

/// Total affectance on v from every other member of the slot (additive).
/// v itself is excluded from the sum whether or not it appears in `slot`.
double slot_affectance(const LinkInstance& inst, const PowerAssignment& pa,
                       const std::vector<std::int64_t>& slot, std::int64_t v);

/// SINR feasibility of one slot: each member's received signal divided by
/// (interference + noise) meets beta. Zero-noise comparisons are strict.
bool is_sinr_feasible(const LinkInstance& inst, const PowerAssignment& pa,
                      const std::vector<std::int64_t>& slot);

struct SignalReport {
  double worst_affectance = 0.0;
  double signal_level = std::numeric_limits<double>::infinity();
  std::int64_t worst_link = -1;
};

/// Worst in-slot affectance over a schedule and its reciprocal, the signal
/// level. Noise is ignored; this is the zero-noise quality measure.
SignalReport signal_level(const LinkInstance& inst, const PowerAssignment& pa,
                          const std::vector<std::vector<std::int64_t>>& slots);

/// True iff every in-slot affectance is strictly below 1/p.
bool is_p_signal(const LinkInstance& inst, const PowerAssignment& pa,
                 const std::vector<std::vector<std::int64_t>>& slots, double p);

/// Noise headroom: every link's received signal is at least 2 * beta * N.
bool noise_power_ok(const LinkInstance& inst, const PowerAssignment& pa);

}  // namespace sinr
