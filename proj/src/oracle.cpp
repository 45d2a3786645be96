#include "sinr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sinr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_cap(std::size_t n, std::size_t max_n, const char* what) {
  if (n > max_n)
    throw cap_exceeded(std::string(what) + ": instance size " + std::to_string(n) +
                       " exceeds cap " + std::to_string(max_n));
}

// interference[i][j]: received at link i's receiver from link j's sender,
// i.e. P_j / d_ji^alpha. Diagonal unused.
std::vector<std::vector<double>> interference_table(const LinkInstance& inst,
                                                    const PowerAssignment& pa) {
  const std::size_t n = inst.size();
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = asym_distance(inst, inst.links[j], inst.links[i]);
      table[i][j] = d == 0.0 ? kInf
                             : power_of(pa, inst.links[j], inst.alpha) / std::pow(d, inst.alpha);
    }
  }
  return table;
}

std::vector<double> signal_table(const LinkInstance& inst, const PowerAssignment& pa) {
  std::vector<double> sig(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i)
    sig[i] = power_of(pa, inst.links[i], inst.alpha) /
             std::pow(link_length(inst.links[i]), inst.alpha);
  return sig;
}

bool mask_feasible(const LinkInstance& inst, const std::vector<double>& sig,
                   const std::vector<std::vector<double>>& interference, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest;) {
    std::uint32_t i = std::countr_zero(rest);
    rest &= rest - 1;
    double total = 0.0;
    for (std::uint32_t other = mask; other;) {
      std::uint32_t j = std::countr_zero(other);
      other &= other - 1;
      if (j != i) total += interference[i][j];
    }
    bool ok = inst.noise == 0.0 ? sig[i] > inst.beta * total
                                : sig[i] >= inst.beta * (total + inst.noise);
    if (!ok) return false;
  }
  return true;
}

// Minimum partition of the full vertex set into parts from `feasible`,
// by dynamic programming over subsets.
int min_partition(std::size_t n, const std::vector<char>& feasible) {
  const std::uint32_t full = n == 32 ? 0xffffffffu : (1u << n) - 1;
  const int unreachable = std::numeric_limits<int>::max() / 2;
  std::vector<int> dp(full + 1, unreachable);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || !feasible[sub]) continue;
      dp[mask] = std::min(dp[mask], 1 + dp[mask ^ sub]);
    }
  }
  if (dp[full] >= unreachable)
    throw std::invalid_argument("some link cannot be scheduled even in a slot of its own");
  return dp[full];
}

}  // namespace

GainMatrix gain_matrix(const LinkInstance& inst, const std::vector<std::int64_t>& set) {
  const std::size_t k = set.size();
  GainMatrix m(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    const Link& v = inst.link_by_id(set[i]);
    double lv_a = std::pow(link_length(v), inst.alpha);
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const Link& w = inst.link_by_id(set[j]);
      double d = asym_distance(inst, w, v);
      m[i][j] = d == 0.0 ? kInf : inst.beta * lv_a / std::pow(d, inst.alpha);
    }
  }
  return m;
}

SpectralBracket spectral_radius_bracket(const GainMatrix& m, double rel_tol,
                                        int max_iterations) {
  const std::size_t k = m.size();
  SpectralBracket out;
  if (k == 0) {
    out.converged = true;
    return out;
  }
  for (const auto& row : m) {
    for (double x : row) {
      if (x == kInf) {
        out.lo = out.hi = kInf;
        out.converged = true;
        return out;
      }
    }
  }
  if (k == 1) {
    out.converged = true;
    return out;
  }

  std::vector<double> x(k, 1.0), y(k);
  for (int it = 1; it <= max_iterations; ++it) {
    // y = (M + I) x; the identity shift keeps the iteration aperiodic.
    double ymax = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < k; ++j) s += m[i][j] * x[j];
      y[i] = s;
      ymax = std::max(ymax, s);
    }
    double lo = kInf, hi = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double ratio = y[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.lo = lo - 1.0;
    out.hi = hi - 1.0;
    out.iterations = it;
    if (out.hi < 1.0 || out.lo >= 1.0 || (hi - lo) <= rel_tol * hi) {
      out.converged = true;
      return out;
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / ymax;
  }
  return out;
}

std::vector<std::uint32_t> enumerate_feasible(const LinkInstance& inst,
                                              const PowerAssignment& pa, std::size_t max_n) {
  check_cap(inst.size(), std::min<std::size_t>(max_n, 24), "enumerate_feasible");
  const std::size_t n = inst.size();
  auto interference = interference_table(inst, pa);
  auto sig = signal_table(inst, pa);
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (n >= 32) ? 0xffffffffu : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (mask_feasible(inst, sig, interference, mask)) out.push_back(mask);
  }
  return out;
}

bool family_downward_closed(std::size_t n, const std::vector<std::uint32_t>& family) {
  std::vector<char> member(std::size_t(1) << n, 0);
  for (std::uint32_t m : family) member[m] = 1;
  for (std::uint32_t m : family) {
    for (std::uint32_t rest = m; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      std::uint32_t sub = m ^ bit;
      if (sub && !member[sub]) return false;
    }
  }
  return true;
}

int optimal_schedule_fixed(const LinkInstance& inst, const PowerAssignment& pa,
                           std::size_t max_n) {
  check_cap(inst.size(), std::min<std::size_t>(max_n, 20), "optimal_schedule_fixed");
  const std::size_t n = inst.size();
  auto interference = interference_table(inst, pa);
  auto sig = signal_table(inst, pa);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> feasible(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    feasible[mask] = mask_feasible(inst, sig, interference, mask);
  return min_partition(n, feasible);
}

bool pc_feasible(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                 std::size_t max_n) {
  if (inst.noise != 0.0)
    throw std::invalid_argument("power-control feasibility is a zero-noise notion");
  check_cap(set.size(), max_n, "pc_feasible");
  if (set.empty()) throw std::invalid_argument("feasibility of an empty set is undefined");
  SpectralBracket b = spectral_radius_bracket(gain_matrix(inst, set));
  if (!b.converged)
    throw no_convergence("spectral radius iteration did not converge after " +
                         std::to_string(b.iterations) + " iterations");
  if (b.hi < 1.0) return true;
  if (b.lo >= 1.0) return false;
  return (b.lo + b.hi) / 2.0 < 1.0;
}

int optimal_schedule_pc(const LinkInstance& inst, std::size_t max_n) {
  if (inst.noise != 0.0)
    throw std::invalid_argument("power-control scheduling oracle is a zero-noise notion");
  check_cap(inst.size(), std::min<std::size_t>(max_n, 20), "optimal_schedule_pc");
  const std::size_t n = inst.size();
  const std::uint32_t full = (1u << n) - 1;

  std::vector<char> feasible(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) == 1) {
      feasible[mask] = 1;
      continue;
    }
    // Supersets of infeasible sets are infeasible; only run the spectral
    // test when every one-smaller subset passed.
    bool children_ok = true;
    for (std::uint32_t rest = mask; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (!feasible[mask ^ bit]) {
        children_ok = false;
        break;
      }
    }
    if (!children_ok) continue;
    std::vector<std::int64_t> ids;
    for (std::uint32_t rest = mask; rest;) {
      std::uint32_t i = std::countr_zero(rest);
      rest &= rest - 1;
      ids.push_back(inst.links[i].id);
    }
    feasible[mask] = pc_feasible(inst, ids, max_n);
  }
  return min_partition(n, feasible);
}

namespace {

struct ChromaticSearch {
  const ConflictGraph& g;
  std::vector<std::int32_t> order;
  std::vector<int> color;
  int best;

  explicit ChromaticSearch(const ConflictGraph& graph) : g(graph) {
    order.resize(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
      if (g.adj[a].size() != g.adj[b].size()) return g.adj[a].size() > g.adj[b].size();
      return g.vertices[a] < g.vertices[b];
    });
    color.assign(g.size(), -1);
    best = static_cast<int>(g.size());
  }

  void run(std::size_t pos, int used) {
    if (used >= best) return;
    if (pos == order.size()) {
      best = used;
      return;
    }
    std::int32_t v = order[pos];
    for (int c = 0; c < std::min(used + 1, best - 1); ++c) {
      bool ok = true;
      for (std::int32_t u : g.adj[v]) {
        if (color[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      run(pos + 1, std::max(used, c + 1));
      color[v] = -1;
    }
  }
};

}  // namespace

int chromatic_exact(const ConflictGraph& g, std::size_t max_n) {
  check_cap(g.size(), max_n, "chromatic_exact");
  if (g.size() == 0) return 0;
  ChromaticSearch search(g);
  search.run(0, 0);
  return search.best;
}

}  // namespace sinr
