#pragma once

// Shared instance builders for the test suites.

#include <cstdint>
#include <vector>

#include "sinr/generator.hpp"
#include "sinr/geometry.hpp"
#include "sinr/rng.hpp"

namespace builders {

using namespace sinr;

inline Link make_link(std::int64_t id, double sx, double sy, double rx, double ry) {
  return Link{id, {sx, sy}, {rx, ry}};
}

/// Unit link lying on the x axis: (x,0) -> (x+1,0).
inline Link unit_link_at(std::int64_t id, double x) { return make_link(id, x, 0.0, x + 1.0, 0.0); }

inline LinkInstance make_instance(std::vector<Link> links,
                                  ModelKind model = ModelKind::Directed, double alpha = 3.0,
                                  double beta = 1.0, double noise = 0.0) {
  LinkInstance inst;
  inst.links = std::move(links);
  inst.model = model;
  inst.alpha = alpha;
  inst.beta = beta;
  inst.noise = noise;
  return inst;
}

inline LinkInstance random_instance(std::uint64_t seed, std::size_t n,
                                    ModelKind model = ModelKind::Directed, double alpha = 3.0,
                                    double area = 0.0, double lambda = 4.0) {
  GeneratorSpec spec;
  spec.n = n;
  spec.seed = seed;
  spec.area_side = area > 0.0 ? area : 4.0 + 2.0 * static_cast<double>(n);
  spec.model = model;
  spec.alpha = alpha;
  spec.dist = LengthDist::LambdaTarget;
  spec.length = 1.0;
  spec.lambda_target = lambda;
  return generate(spec);
}

inline std::vector<std::int64_t> all_ids(const LinkInstance& inst) {
  std::vector<std::int64_t> ids;
  ids.reserve(inst.size());
  for (const Link& v : inst.links) ids.push_back(v.id);
  return ids;
}

}  // namespace builders
