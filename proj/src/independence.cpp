#include "sinr/independence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sinr {

namespace {

double pair_threshold(double q, const Link& v, const Link& w) {
  return (q * q) * (link_length(v) * link_length(w));
}

}  // namespace

bool q_independent_pair(const LinkInstance& inst, const Link& v, const Link& w, double q) {
  double dvw = asym_distance(inst, v, w);
  double dwv = asym_distance(inst, w, v);
  return dvw * dwv > pair_threshold(q, v, w);
}

bool q_independent_mean(const LinkInstance& inst, const Link& v, const Link& w, double q) {
  double dvw = asym_distance(inst, v, w);
  double dwv = asym_distance(inst, w, v);
  double thr = pair_threshold(q, v, w);
  return dvw * dvw > thr && dwv * dwv > thr;
}

bool is_q_independent_set(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                          double q, IndependenceCriterion criterion) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Link& v = inst.link_by_id(set[i]);
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Link& w = inst.link_by_id(set[j]);
      bool ok = criterion == IndependenceCriterion::General
                    ? q_independent_pair(inst, v, w, q)
                    : q_independent_mean(inst, v, w, q);
      if (!ok) return false;
    }
  }
  return true;
}

bool tau_close(const LinkInstance& inst, const Link& v, const Link& w, double tau) {
  PowerAssignment mean = PowerAssignment::mean();
  return std::max(affectance(inst, mean, v, w), affectance(inst, mean, w, v)) >= tau;
}

int boundedness(const LinkInstance& inst, const std::vector<std::int64_t>& set) {
  std::vector<std::int64_t> universe;
  universe.reserve(inst.size());
  for (const Link& v : inst.links) universe.push_back(v.id);
  return boundedness(inst, set, universe, inst.size());
}

int boundedness(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                const std::vector<std::int64_t>& universe, std::size_t n) {
  double n2 = static_cast<double>(n) * static_cast<double>(n);
  double tau = 1.0 / (2.0 * static_cast<double>(n));
  int worst = 0;
  for (std::int64_t vid : universe) {
    const Link& v = inst.link_by_id(vid);
    double lv = link_length(v);
    int count = 0;
    for (std::int64_t wid : set) {
      if (wid == vid) continue;
      const Link& w = inst.link_by_id(wid);
      if (link_length(w) >= n2 * lv && tau_close(inst, v, w, tau)) ++count;
    }
    worst = std::max(worst, count);
  }
  return worst;
}

bool is_well_separated(const LinkInstance& inst, const std::vector<std::int64_t>& set) {
  return is_well_separated(inst, set, inst.size());
}

bool is_well_separated(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                       std::size_t n) {
  double n2 = static_cast<double>(n) * static_cast<double>(n);
  for (std::size_t i = 0; i < set.size(); ++i) {
    double li = link_length(inst.link_by_id(set[i]));
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      double lj = link_length(inst.link_by_id(set[j]));
      double ratio = li > lj ? li / lj : lj / li;
      if (ratio > 2.0 && ratio < n2) return false;
    }
  }
  return true;
}

std::size_t ConflictGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

bool ConflictGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& nb = adj[i];
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::int32_t>(j));
}

void ConflictGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  auto ins = [](std::vector<std::int32_t>& nb, std::int32_t x) {
    auto it = std::lower_bound(nb.begin(), nb.end(), x);
    if (it == nb.end() || *it != x) nb.insert(it, x);
  };
  ins(adj[i], static_cast<std::int32_t>(j));
  ins(adj[j], static_cast<std::int32_t>(i));
}

ConflictGraph build_conflict_graph(const LinkInstance& inst, double q) {
  ConflictGraph g;
  g.q = q;
  g.model = inst.model;
  g.vertices.reserve(inst.size());
  for (const Link& v : inst.links) g.vertices.push_back(v.id);
  g.adj.assign(inst.size(), {});
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      const Link& v = inst.links[i];
      const Link& w = inst.links[j];
      bool independent = inst.model == ModelKind::Directed
                             ? q_independent_mean(inst, v, w, q)
                             : q_independent_pair(inst, v, w, q);
      if (!independent) g.add_edge(i, j);
    }
  }
  return g;
}

std::string write_edge_list(const ConflictGraph& g) {
  std::ostringstream out;
  out << "vertices";
  for (std::int64_t id : g.vertices) out << ' ' << id;
  out << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::int32_t j : g.adj[i]) {
      if (static_cast<std::size_t>(j) > i) out << g.vertices[i] << ' ' << g.vertices[j] << '\n';
    }
  }
  return out.str();
}

ConflictGraph read_edge_list(std::istream& in) {
  ConflictGraph g;
  std::map<std::int64_t, std::size_t> index;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      if (!(ls >> tag)) continue;  // blank line before header
      if (tag != "vertices")
        throw std::invalid_argument("edge list must start with a 'vertices' header");
      std::int64_t id;
      while (ls >> id) {
        if (!index.emplace(id, g.vertices.size()).second)
          throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
        g.vertices.push_back(id);
      }
      g.adj.assign(g.vertices.size(), {});
      have_header = true;
      continue;
    }
    std::int64_t a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw std::invalid_argument("edge line needs two vertex ids");
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw std::invalid_argument("edge references unknown vertex");
    if (ia->second == ib->second)
      throw std::invalid_argument("self-loops are not allowed");
    g.add_edge(ia->second, ib->second);
  }
  if (!have_header) throw std::invalid_argument("edge list must start with a 'vertices' header");
  return g;
}

ConflictGraph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace sinr
