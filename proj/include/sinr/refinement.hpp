#pragma once

#include <cstdint>
#include <vector>

#include "sinr/interference.hpp"

namespace sinr {

/// An ordered partition of a link subset into slots, tied to the power
/// assignment it was built for.
struct Schedule {
  PowerAssignment power;
  std::vector<std::vector<std::int64_t>> slots;

  std::size_t slot_count() const { return slots.size(); }
  std::size_t link_count() const;
};

/// Signal strengthening: rebuilds each slot so that every in-slot affectance
/// drops strictly below 1/p_target, growing the slot count by at most
/// ceil(2*p_target/p)^2 where p is the measured input level capped at
/// p_target. Covered links are preserved exactly; already-strong schedules
/// are returned unchanged. Throws when some slot holds a pair at infinite
/// affectance, which no slot count can repair.
Schedule refine(const LinkInstance& inst, const Schedule& sched, double p_target);

}  // namespace sinr
