#pragma once

#include <string>
#include <vector>

#include "sinr/generator.hpp"

namespace sinr {

struct BenchOptions {
  int repetitions = 1;
  bool with_oracle = false;
  bool with_time = true;  // wall_ms is the one nondeterministic column
  std::size_t oracle_cap = 12;
};

/// One CSV row per (spec, repetition): the schedule length, the exact optima
/// when the oracle is on and the instance is small enough, and their ratios.
/// Rows are emitted in a deterministic order; apart from wall_ms the output
/// is a pure function of the specs.
std::string bench_csv(const std::vector<GeneratorSpec>& specs, const BenchOptions& opt = {});

}  // namespace sinr
