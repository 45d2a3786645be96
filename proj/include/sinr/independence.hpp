#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sinr/geometry.hpp"
#include "sinr/interference.hpp"

namespace sinr {

/// Which pairwise separation test defines independence.
/// General:   d_vw * d_wv > q^2 * l_v * l_w
/// MeanPower: both directed distances exceed q * sqrt(l_v * l_w)
/// The two coincide in the bidirectional model.
enum class IndependenceCriterion { General, MeanPower };

bool q_independent_pair(const LinkInstance& inst, const Link& v, const Link& w, double q);
bool q_independent_mean(const LinkInstance& inst, const Link& v, const Link& w, double q);

bool is_q_independent_set(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                          double q, IndependenceCriterion criterion);

/// True iff one of the two mean-power affectances between v and w is >= tau.
bool tau_close(const LinkInstance& inst, const Link& v, const Link& w, double tau);

/// Smallest p such that `set` is p-bounded: the worst link of the instance
/// has p members of `set` that are at least n^2 times longer and 1/(2n)-close
/// to it under mean power. Candidate links range over the whole instance and
/// n is the instance size.
int boundedness(const LinkInstance& inst, const std::vector<std::int64_t>& set);

/// Same measure over an explicit candidate universe and threshold size n.
int boundedness(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                const std::vector<std::int64_t>& universe, std::size_t n);

/// True iff no pairwise length ratio falls inside the open interval (2, n^2).
bool is_well_separated(const LinkInstance& inst, const std::vector<std::int64_t>& set);
bool is_well_separated(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                       std::size_t n);

/// Undirected graph on the instance links whose edges join non-independent
/// pairs: the mean-power criterion in the directed model, the general one in
/// the bidirectional model.
struct ConflictGraph {
  std::vector<std::int64_t> vertices;          // link ids, instance order
  std::vector<std::vector<std::int32_t>> adj;  // sorted neighbor indices
  double q = 0.0;
  ModelKind model = ModelKind::Directed;

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t i, std::size_t j) const;
  void add_edge(std::size_t i, std::size_t j);
};

ConflictGraph build_conflict_graph(const LinkInstance& inst, double q);

/// Edge-list text format: a header line "vertices <id>..." followed by one
/// "id1 id2" line per edge. '#' starts a comment.
std::string write_edge_list(const ConflictGraph& g);
ConflictGraph read_edge_list(std::istream& in);
ConflictGraph read_edge_list(const std::string& text);

}  // namespace sinr
