#include "sinr/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sinr {

std::size_t Schedule::link_count() const {
  std::size_t n = 0;
  for (const auto& s : slots) n += s.size();
  return n;
}

namespace {

struct Entry {
  std::int64_t id;
  const Link* link;
  double length;
};

std::vector<Entry> entries_of(const LinkInstance& inst, const std::vector<std::int64_t>& slot) {
  std::vector<Entry> out;
  out.reserve(slot.size());
  for (std::int64_t id : slot) {
    const Link& l = inst.link_by_id(id);
    out.push_back({id, &l, link_length(l)});
  }
  return out;
}

// First-fit split: place each entry into the first group where the
// affectance it would receive from that group stays below the threshold.
std::vector<std::vector<Entry>> first_fit_split(const LinkInstance& inst,
                                                const PowerAssignment& pa,
                                                std::vector<Entry> order, double threshold) {
  std::vector<std::vector<Entry>> groups;
  for (const Entry& e : order) {
    bool placed = false;
    for (auto& g : groups) {
      double onto = 0.0;
      for (const Entry& m : g) onto += affectance(inst, pa, *m.link, *e.link);
      if (onto < threshold) {
        g.push_back(e);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({e});
  }
  return groups;
}

bool group_is_strong(const LinkInstance& inst, const PowerAssignment& pa,
                     const std::vector<Entry>& g, double p_target) {
  for (const Entry& e : g) {
    double a = 0.0;
    for (const Entry& m : g) {
      if (m.id == e.id) continue;
      a += affectance(inst, pa, *m.link, *e.link);
    }
    if (!(a < 1.0 / p_target)) return false;
  }
  return true;
}

}  // namespace

Schedule refine(const LinkInstance& inst, const Schedule& sched, double p_target) {
  if (!(p_target > 0.0)) throw std::invalid_argument("refinement target must be positive");
  if (sched.slots.empty()) return sched;

  SignalReport in = signal_level(inst, sched.power, sched.slots);
  if (in.worst_affectance == std::numeric_limits<double>::infinity())
    throw std::invalid_argument("slot contains a pair with infinite affectance; link " +
                                std::to_string(in.worst_link) +
                                " cannot reach any positive signal level");
  if (in.worst_affectance < 1.0 / p_target) return sched;

  const double threshold = 1.0 / (2.0 * p_target);
  Schedule out;
  out.power = sched.power;

  for (const auto& slot : sched.slots) {
    auto entries = entries_of(inst, slot);

    // Longest first: bounds what each link receives from longer slot-mates.
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      if (a.length != b.length) return a.length > b.length;
      return a.id < b.id;
    });
    auto groups = first_fit_split(inst, sched.power, entries, threshold);

    // Shortest first within each group: bounds what each link receives from
    // shorter slot-mates, so the two halves add up below 1/p_target.
    std::vector<std::vector<Entry>> final_groups;
    for (auto& g : groups) {
      std::sort(g.begin(), g.end(), [](const Entry& a, const Entry& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.id < b.id;
      });
      for (auto& sub : first_fit_split(inst, sched.power, g, threshold))
        final_groups.push_back(std::move(sub));
    }

    // Verification pass: the strengthened property is the contract, so any
    // group that misses it sheds its worst link into a fresh group.
    std::vector<Entry> pending;
    for (auto& g : final_groups) {
      while (!group_is_strong(inst, sched.power, g, p_target)) {
        auto worst = g.begin();
        double worst_a = -1.0;
        for (auto it = g.begin(); it != g.end(); ++it) {
          double a = 0.0;
          for (const Entry& m : g) {
            if (m.id != it->id) a += affectance(inst, sched.power, *m.link, *it->link);
          }
          if (a > worst_a || (a == worst_a && it->id > worst->id)) {
            worst_a = a;
            worst = it;
          }
        }
        pending.push_back(*worst);
        g.erase(worst);
      }
    }
    for (const Entry& e : pending) {
      bool placed = false;
      for (auto& g : final_groups) {
        auto candidate = g;
        candidate.push_back(e);
        if (group_is_strong(inst, sched.power, candidate, p_target)) {
          g = std::move(candidate);
          placed = true;
          break;
        }
      }
      if (!placed) final_groups.push_back({e});
    }

    for (const auto& g : final_groups) {
      if (g.empty()) continue;
      std::vector<std::int64_t> ids;
      ids.reserve(g.size());
      for (const Entry& e : g) ids.push_back(e.id);
      out.slots.push_back(std::move(ids));
    }
  }
  return out;
}

}  // namespace sinr
