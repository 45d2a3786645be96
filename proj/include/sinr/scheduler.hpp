#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sinr/coloring.hpp"
#include "sinr/independence.hpp"
#include "sinr/refinement.hpp"

namespace sinr {

/// Execution record of one schedule_independent run, for budget accounting.
struct Alg1Trace {
  std::size_t universe_n = 0;
  double l_min = 0.0;
  double f = 0.0;                                  // per-class target level
  std::map<int, std::vector<std::int64_t>> classes;  // i -> lengths in [2^(i-1), 2^i) * l_min
  std::map<int, std::vector<int>> buckets;           // bucket -> class indices
  std::map<int, int> class_slots;                    // class -> refined slot count
  std::vector<int> round_slots_opened;               // per merge round, in emission order
  int boundedness = 0;
  int nonempty_buckets = 0;
  int max_class_slots = 0;
  int slots_before_safety = 0;
  int safety_extra_slots = 0;
  bool beta_refine_applied = false;
  int final_slots = 0;

  int budget() const { return (boundedness + 1) * nonempty_buckets * max_class_slots; }
};

/// Splits Q into length classes: class i holds the links whose length lies
/// in [2^(i-1), 2^i) times the minimum length of Q.
std::map<int, std::vector<std::int64_t>> partition_equilength(const LinkInstance& inst,
                                                              const std::vector<std::int64_t>& Q);

/// Groups class indices into W = 2*ceil(log2 n) residue buckets (W = 2 when
/// n <= 1), so classes sharing a bucket differ in length by >= 2^(W-1).
std::map<int, std::vector<int>> bucketize(const std::map<int, std::vector<std::int64_t>>& classes,
                                          std::size_t n);

/// Schedules a q-independent set Q under the mean power assignment: buckets
/// of well-separated length classes, a per-class strengthening to level
/// 2^(alpha/2+1) under uniform power, and a first-fit merge that keeps
/// much-longer close links out of each slot. Rejects sets that are not
/// q-independent under the model's criterion. When `universe` is given, its
/// size provides the thresholds n^2 and 1/(2n) (pipeline use); otherwise Q
/// itself is the universe.
Schedule schedule_independent(const LinkInstance& inst, const std::vector<std::int64_t>& Q,
                              double q, Alg1Trace* trace = nullptr,
                              const std::vector<std::int64_t>* universe = nullptr);

struct SchedulePcTrace {
  double q = 0.0;
  ConflictGraph graph;
  Coloring coloring;
  std::vector<std::vector<std::int64_t>> color_classes;
  std::vector<std::int64_t> degenerate_links;
  std::vector<Alg1Trace> class_traces;
};

/// Full pipeline: conflict graph (q = 2 bidirectional, q = 3 directed),
/// degeneracy coloring, one schedule_independent run per color class.
/// Output covers every link and is zero-noise SINR-feasible under mean power.
Schedule schedule_pc(const LinkInstance& inst, SchedulePcTrace* trace = nullptr);

/// Turns a zero-noise mean-power schedule into one feasible with the
/// instance's actual noise: strengthen to signal level 2*beta, then raise the
/// mean-power scale to the smallest c meeting the noise headroom constraint.
/// Identity when the instance is noiseless.
Schedule noise_lift(const LinkInstance& inst);
Schedule noise_lift(const LinkInstance& inst, const Schedule& zero_noise);

}  // namespace sinr
