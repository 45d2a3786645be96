#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sinr/coloring.hpp"
#include "sinr/interference.hpp"

namespace sinr {

/// Raised when an exact computation would exceed its instance-size cap.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the spectral-radius iteration fails to bracket the answer.
struct no_convergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Normalized gain matrix over a link subset: M[v][w] = beta * l_v^alpha /
/// d_wv^alpha off the diagonal, zero on it. A power vector P makes the whole
/// subset SINR-feasible (zero noise) iff P > M P has a positive solution,
/// i.e. iff the spectral radius of M is below one.
using GainMatrix = std::vector<std::vector<double>>;

GainMatrix gain_matrix(const LinkInstance& inst, const std::vector<std::int64_t>& set);

struct SpectralBracket {
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Encloses the spectral radius of a nonnegative matrix by power iteration
/// on M + I (the shift breaks the oscillation of purely off-diagonal
/// matrices). Stops early once the bracket settles on either side of 1.
SpectralBracket spectral_radius_bracket(const GainMatrix& m, double rel_tol = 1e-10,
                                        int max_iterations = 10000);

/// All SINR-feasible nonempty subsets, as bitmasks over the instance order.
std::vector<std::uint32_t> enumerate_feasible(const LinkInstance& inst,
                                              const PowerAssignment& pa,
                                              std::size_t max_n = 16);

/// True iff every subset of every member of the family is present.
bool family_downward_closed(std::size_t n, const std::vector<std::uint32_t>& family);

/// Exact minimum number of slots partitioning all links, powers fixed.
int optimal_schedule_fixed(const LinkInstance& inst, const PowerAssignment& pa,
                           std::size_t max_n = 12);

/// Power-control feasibility of a subset at zero noise, by spectral radius.
bool pc_feasible(const LinkInstance& inst, const std::vector<std::int64_t>& set,
                 std::size_t max_n = 16);

/// Exact minimum slot count when the power assignment is also free.
int optimal_schedule_pc(const LinkInstance& inst, std::size_t max_n = 12);

/// Exact chromatic number by branch and bound.
int chromatic_exact(const ConflictGraph& g, std::size_t max_n = 12);

}  // namespace sinr
