#include "sinr/scheduler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace sinr {

namespace {

struct Entry {
  std::int64_t id;
  const Link* link;
  double length;
};

Entry entry_of(const LinkInstance& inst, std::int64_t id) {
  const Link& l = inst.link_by_id(id);
  return {id, &l, link_length(l)};
}

void sort_longest_first(std::vector<Entry>& v) {
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.id < b.id;
  });
}

// Evicts links until every slot member's in-slot mean-power affectance is
// strictly below 1, then first-fits the evicted links into fresh slots.
// The construction already guarantees this on sound inputs; the pass turns
// the accounting argument into a checked contract.
int enforce_strength(const LinkInstance& inst, const PowerAssignment& pa,
                     std::vector<std::vector<Entry>>& slots) {
  std::vector<Entry> pending;
  auto in_affectance = [&](const std::vector<Entry>& slot, const Entry& e) {
    double a = 0.0;
    for (const Entry& m : slot) {
      if (m.id != e.id) a += affectance(inst, pa, *m.link, *e.link);
    }
    return a;
  };
  for (auto& slot : slots) {
    for (;;) {
      auto worst = slot.end();
      double worst_a = -1.0;
      for (auto it = slot.begin(); it != slot.end(); ++it) {
        double a = in_affectance(slot, *it);
        if (a > worst_a || (a == worst_a && worst != slot.end() && it->id > worst->id)) {
          worst_a = a;
          worst = it;
        }
      }
      if (worst == slot.end() || worst_a < 1.0) break;
      pending.push_back(*worst);
      slot.erase(worst);
    }
  }
  int extra = 0;
  std::size_t first_extra = slots.size();
  sort_longest_first(pending);
  for (const Entry& e : pending) {
    bool placed = false;
    for (std::size_t i = first_extra; i < slots.size(); ++i) {
      auto candidate = slots[i];
      candidate.push_back(e);
      bool strong = true;
      for (const Entry& m : candidate) {
        if (!(in_affectance(candidate, m) < 1.0)) {
          strong = false;
          break;
        }
      }
      if (strong) {
        slots[i].push_back(e);
        placed = true;
        break;
      }
    }
    if (!placed) {
      slots.push_back({e});
      ++extra;
    }
  }
  return extra;
}

}  // namespace

std::map<int, std::vector<std::int64_t>> partition_equilength(const LinkInstance& inst,
                                                              const std::vector<std::int64_t>& Q) {
  if (Q.empty()) throw std::invalid_argument("cannot partition an empty set");
  double l_min = std::numeric_limits<double>::infinity();
  for (std::int64_t id : Q) l_min = std::min(l_min, link_length(inst.link_by_id(id)));
  std::map<int, std::vector<std::int64_t>> classes;
  for (std::int64_t id : Q) {
    double l = link_length(inst.link_by_id(id));
    int i = 1;
    double bound = 2.0 * l_min;
    while (l >= bound) {
      bound *= 2.0;
      ++i;
    }
    classes[i].push_back(id);
  }
  return classes;
}

std::map<int, std::vector<int>> bucketize(const std::map<int, std::vector<std::int64_t>>& classes,
                                          std::size_t n) {
  int w = n <= 1 ? 2 : 2 * static_cast<int>(std::bit_width(n - 1));
  std::map<int, std::vector<int>> buckets;
  for (const auto& [ci, links] : classes) {
    if (ci < 1) throw std::invalid_argument("class indices start at 1");
    if (links.empty()) continue;
    buckets[(ci - 1) % w + 1].push_back(ci);
  }
  return buckets;
}

Schedule schedule_independent(const LinkInstance& inst, const std::vector<std::int64_t>& Q,
                              double q, Alg1Trace* trace,
                              const std::vector<std::int64_t>* universe) {
  if (Q.empty()) throw std::invalid_argument("cannot schedule an empty set");
  if (!(q >= 1.0)) throw std::invalid_argument("independence parameter q must be >= 1");
  IndependenceCriterion crit = inst.model == ModelKind::Directed
                                   ? IndependenceCriterion::MeanPower
                                   : IndependenceCriterion::General;
  if (!is_q_independent_set(inst, Q, q, crit))
    throw std::invalid_argument("input set is not " + std::to_string(q) + "-independent");

  const std::size_t n = universe ? universe->size() : Q.size();
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const double tau = 1.0 / (2.0 * static_cast<double>(n));
  const double f = std::pow(2.0, inst.alpha / 2.0 + 1.0);

  LinkInstance zero = inst;
  zero.noise = 0.0;

  auto classes = partition_equilength(inst, Q);
  auto buckets = bucketize(classes, n);

  Alg1Trace t;
  t.universe_n = n;
  t.f = f;
  t.classes = classes;
  t.buckets = buckets;
  t.l_min = std::numeric_limits<double>::infinity();
  for (std::int64_t id : Q) t.l_min = std::min(t.l_min, link_length(inst.link_by_id(id)));
  t.nonempty_buckets = static_cast<int>(buckets.size());

  PowerAssignment mean = PowerAssignment::mean();
  std::vector<std::vector<Entry>> slots;

  for (const auto& [bucket_idx, class_indices] : buckets) {
    // Strengthen each equilength class on its own, under uniform power.
    std::vector<std::vector<std::vector<std::int64_t>>> class_schedules;
    std::size_t rounds = 0;
    for (int ci : class_indices) {
      Schedule single{PowerAssignment::uniform(), {classes[ci]}};
      Schedule refined = refine(zero, single, f);
      t.class_slots[ci] = static_cast<int>(refined.slots.size());
      t.max_class_slots = std::max(t.max_class_slots, static_cast<int>(refined.slots.size()));
      rounds = std::max(rounds, refined.slots.size());
      class_schedules.push_back(std::move(refined.slots));
    }

    // Merge the s-th slots of all classes, longest links first, keeping
    // much-longer close links away from each entering link.
    for (std::size_t s = 0; s < rounds; ++s) {
      std::vector<Entry> merged;
      for (const auto& cs : class_schedules) {
        if (s < cs.size()) {
          for (std::int64_t id : cs[s]) merged.push_back(entry_of(inst, id));
        }
      }
      sort_longest_first(merged);

      std::vector<std::vector<Entry>> round_slots;
      for (const Entry& e : merged) {
        bool placed = false;
        for (auto& slot : round_slots) {
          bool blocked = false;
          for (const Entry& m : slot) {
            if (m.length > n2 * e.length && tau_close(inst, *m.link, *e.link, tau)) {
              blocked = true;
              break;
            }
          }
          if (!blocked) {
            slot.push_back(e);
            placed = true;
            break;
          }
        }
        if (!placed) round_slots.push_back({e});
      }
      t.round_slots_opened.push_back(static_cast<int>(round_slots.size()));
      for (auto& slot : round_slots) slots.push_back(std::move(slot));
    }
  }

  t.slots_before_safety = static_cast<int>(slots.size());
  t.safety_extra_slots = enforce_strength(inst, mean, slots);

  Schedule out;
  out.power = mean;
  for (const auto& slot : slots) {
    std::vector<std::int64_t> ids;
    ids.reserve(slot.size());
    for (const Entry& e : slot) ids.push_back(e.id);
    out.slots.push_back(std::move(ids));
  }

  // The construction yields strength level 1; a stricter SINR threshold
  // needs one more strengthening round.
  if (inst.beta > 1.0) {
    out = refine(zero, out, inst.beta);
    t.beta_refine_applied = true;
  }

  t.final_slots = static_cast<int>(out.slots.size());
  if (universe) {
    t.boundedness = boundedness(inst, Q, *universe, n);
  } else {
    t.boundedness = boundedness(inst, Q, Q, n);
  }
  if (trace) *trace = std::move(t);
  return out;
}

Schedule schedule_pc(const LinkInstance& inst, SchedulePcTrace* trace) {
  if (inst.links.empty()) throw std::invalid_argument("instance has no links");
  const double q = inst.model == ModelKind::Bidirectional ? 2.0 : 3.0;

  ConflictGraph g = build_conflict_graph(inst, q);
  Coloring col = hochbaum_color(g);

  std::vector<std::vector<std::int64_t>> color_classes(col.num_colors);
  for (std::size_t i = 0; i < g.size(); ++i)
    color_classes[col.colors[i]].push_back(g.vertices[i]);

  // Links that would sit at infinite mean-power affectance inside their
  // class get dedicated singleton slots at the end. Coloring separates all
  // zero-distance pairs already, so this only guards degenerate input.
  std::vector<std::int64_t> degenerate;
  for (auto& cls : color_classes) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < cls.size() && !changed; ++i) {
        const Link& v = inst.link_by_id(cls[i]);
        for (std::size_t j = i + 1; j < cls.size() && !changed; ++j) {
          const Link& w = inst.link_by_id(cls[j]);
          if (asym_distance(inst, v, w) == 0.0 || asym_distance(inst, w, v) == 0.0) {
            degenerate.push_back(cls[j]);
            cls.erase(cls.begin() + j);
            changed = true;
          }
        }
      }
    }
  }

  std::vector<std::int64_t> all_ids;
  all_ids.reserve(inst.size());
  for (const Link& v : inst.links) all_ids.push_back(v.id);

  Schedule out;
  out.power = PowerAssignment::mean();
  SchedulePcTrace t;
  t.q = q;
  t.graph = g;
  t.coloring = col;
  t.color_classes = color_classes;
  t.degenerate_links = degenerate;

  for (const auto& cls : color_classes) {
    if (cls.empty()) continue;
    Alg1Trace ct;
    Schedule part = schedule_independent(inst, cls, q, trace ? &ct : nullptr, &all_ids);
    for (auto& slot : part.slots) out.slots.push_back(std::move(slot));
    if (trace) t.class_traces.push_back(std::move(ct));
  }
  for (std::int64_t id : degenerate) out.slots.push_back({id});

  if (trace) *trace = std::move(t);
  return out;
}

Schedule noise_lift(const LinkInstance& inst) {
  LinkInstance zero = inst;
  zero.noise = 0.0;
  Schedule base = schedule_pc(zero);
  return noise_lift(inst, base);
}

Schedule noise_lift(const LinkInstance& inst, const Schedule& zero_noise) {
  if (inst.noise == 0.0) return zero_noise;
  if (zero_noise.power.kind != PowerKind::Mean)
    throw std::invalid_argument("noise lift is defined for mean-power schedules");

  LinkInstance zero = inst;
  zero.noise = 0.0;
  Schedule lifted = refine(zero, zero_noise, 2.0 * inst.beta);

  double max_mean = 0.0;
  for (const Link& v : inst.links)
    max_mean = std::max(max_mean, std::pow(link_length(v), inst.alpha / 2.0));
  lifted.power = PowerAssignment::mean(2.0 * inst.beta * inst.noise * max_mean);
  return lifted;
}

}  // namespace sinr
