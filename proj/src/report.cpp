#include "sinr/report.hpp"

#include <set>
#include <stdexcept>

#include "sinr/independence.hpp"
#include "sinr/interference.hpp"

namespace sinr {

ScheduleReport verify(const LinkInstance& inst, const Schedule& sched) {
  std::set<std::int64_t> seen;
  for (const auto& slot : sched.slots) {
    if (slot.empty()) throw std::invalid_argument("schedule contains an empty slot");
    for (std::int64_t id : slot) {
      if (!inst.index_of(id))
        throw std::invalid_argument("schedule references unknown link id " + std::to_string(id));
      if (!seen.insert(id).second)
        throw std::invalid_argument("link " + std::to_string(id) +
                                    " appears in more than one slot");
    }
  }

  ScheduleReport rep;
  rep.slot_count = static_cast<int>(sched.slots.size());
  rep.instance_n = inst.size();
  rep.covered = seen.size();
  rep.lambda = length_diversity(inst);

  rep.feasible = true;
  for (std::size_t s = 0; s < sched.slots.size(); ++s) {
    const auto& slot = sched.slots[s];
    rep.slot_boundedness.push_back(boundedness(inst, slot));
    if (!is_sinr_feasible(inst, sched.power, slot)) {
      rep.feasible = false;
      // Name the worst-hit link of the failing slot.
      double worst = -1.0;
      std::int64_t worst_id = slot.front();
      for (std::int64_t id : slot) {
        double a = slot_affectance(inst, sched.power, slot, id);
        if (a > worst) {
          worst = a;
          worst_id = id;
        }
      }
      rep.violations.push_back("slot " + std::to_string(s) + " infeasible; worst-hit link " +
                               std::to_string(worst_id));
    }
  }

  SignalReport sig = signal_level(inst, sched.power, sched.slots);
  rep.worst_affectance = sig.worst_affectance;
  rep.signal_level = sig.signal_level;
  rep.worst_link = sig.worst_link;
  return rep;
}

}  // namespace sinr
