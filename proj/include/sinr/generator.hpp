#pragma once

#include <cstdint>

#include "sinr/geometry.hpp"

namespace sinr {

enum class LengthDist { Fixed, Uniform, LambdaTarget };

const char* length_dist_name(LengthDist d);

/// Reproducible random-instance recipe: the same spec always generates the
/// same instance, byte for byte.
struct GeneratorSpec {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  double area_side = 100.0;
  LengthDist dist = LengthDist::Fixed;
  double length = 1.0;       // Fixed value; also the LambdaTarget base length
  double length_min = 1.0;   // Uniform bounds
  double length_max = 2.0;
  double lambda_target = 1.0;
  ModelKind model = ModelKind::Directed;
  double alpha = 3.0;
  double beta = 1.0;
  double noise = 0.0;
};

/// Senders uniform in the square, receivers at the drawn length in a uniform
/// random direction. Per link the draw order is sx, sy, length, angle.
LinkInstance generate(const GeneratorSpec& spec);

}  // namespace sinr
