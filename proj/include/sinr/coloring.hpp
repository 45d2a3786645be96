#pragma once

#include <cstdint>
#include <vector>

#include "sinr/independence.hpp"

namespace sinr {

struct DegeneracyOrder {
  std::vector<std::int32_t> order;  // vertex indices in removal order
  int delta = 0;                    // graph degeneracy
};

/// Repeatedly removes a minimum-degree vertex (ties: lowest id). delta is
/// the largest degree seen at removal time, i.e. the degeneracy.
DegeneracyOrder degeneracy_order(const ConflictGraph& g);

struct Coloring {
  std::vector<int> colors;  // by vertex index, 0-based contiguous
  int num_colors = 0;

  int color_of(const ConflictGraph& g, std::int64_t id) const;
};

/// Greedy coloring along the reverse degeneracy order; uses at most
/// degeneracy + 1 colors.
Coloring hochbaum_color(const ConflictGraph& g);

bool is_proper(const ConflictGraph& g, const Coloring& c);

}  // namespace sinr
