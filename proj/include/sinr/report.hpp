#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sinr/refinement.hpp"

namespace sinr {

/// Verification outcome and quality metrics for a schedule against an
/// instance. `feasible` is the authoritative bit: schedulers never certify
/// their own output.
struct ScheduleReport {
  int slot_count = 0;
  bool feasible = false;
  double worst_affectance = 0.0;  // zero-noise measure over all slots
  double signal_level = 0.0;
  std::int64_t worst_link = -1;
  double lambda = 1.0;
  std::size_t covered = 0;
  std::size_t instance_n = 0;
  std::vector<int> slot_boundedness;  // boundedness of each slot's link set
  std::vector<std::string> violations;
  std::optional<double> ratio_vs_fixed_opt;
  std::optional<double> ratio_vs_pc_opt;
};

/// Checks the schedule slot by slot under its own power assignment and the
/// instance's noise. Throws on unknown ids or links appearing twice.
ScheduleReport verify(const LinkInstance& inst, const Schedule& sched);

}  // namespace sinr
