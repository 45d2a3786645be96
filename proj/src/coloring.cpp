#include "sinr/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sinr {

DegeneracyOrder degeneracy_order(const ConflictGraph& g) {
  const std::size_t n = g.size();
  DegeneracyOrder out;
  out.order.reserve(n);

  std::vector<int> degree(n);
  // Buckets keyed by degree hold (id, index) so equal-degree ties pick the
  // lowest vertex id.
  std::vector<std::set<std::pair<std::int64_t, std::int32_t>>> buckets(n == 0 ? 1 : n);
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = static_cast<int>(g.adj[i].size());
    buckets[degree[i]].insert({g.vertices[i], static_cast<std::int32_t>(i)});
  }

  std::vector<bool> removed(n, false);
  std::size_t lowest = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (lowest < buckets.size() && buckets[lowest].empty()) ++lowest;
    auto it = buckets[lowest].begin();
    std::int32_t v = it->second;
    buckets[lowest].erase(it);
    removed[v] = true;
    out.delta = std::max(out.delta, degree[v]);
    out.order.push_back(v);
    for (std::int32_t u : g.adj[v]) {
      if (removed[u]) continue;
      buckets[degree[u]].erase({g.vertices[u], u});
      --degree[u];
      buckets[degree[u]].insert({g.vertices[u], u});
      if (static_cast<std::size_t>(degree[u]) < lowest) lowest = degree[u];
    }
  }
  return out;
}

int Coloring::color_of(const ConflictGraph& g, std::int64_t id) const {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.vertices[i] == id) return colors[i];
  }
  throw std::invalid_argument("unknown vertex id " + std::to_string(id));
}

Coloring hochbaum_color(const ConflictGraph& g) {
  DegeneracyOrder deg = degeneracy_order(g);
  Coloring c;
  c.colors.assign(g.size(), -1);
  for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it) {
    std::int32_t v = *it;
    std::vector<bool> used(deg.delta + 2, false);
    for (std::int32_t u : g.adj[v]) {
      int cu = c.colors[u];
      if (cu >= 0 && cu < static_cast<int>(used.size())) used[cu] = true;
    }
    int color = 0;
    while (used[color]) ++color;
    c.colors[v] = color;
    c.num_colors = std::max(c.num_colors, color + 1);
  }
  if (g.size() == 0) c.num_colors = 0;
  return c;
}

bool is_proper(const ConflictGraph& g, const Coloring& c) {
  if (c.colors.size() != g.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (c.colors[i] < 0) return false;
    for (std::int32_t j : g.adj[i]) {
      if (c.colors[i] == c.colors[j]) return false;
    }
  }
  return true;
}

}  // namespace sinr
