#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sinr {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Euclidean distance in the plane.
double distance(const Point& a, const Point& b);

/// A communication request: a sender node and a receiver node.
struct Link {
  std::int64_t id = 0;
  Point sender;
  Point receiver;
};

/// Sender-to-receiver distance of the link itself.
double link_length(const Link& v);

enum class ModelKind { Directed, Bidirectional };

const char* model_name(ModelKind m);

/// A link set together with its physical model parameters.
///
/// Invariants (reported by validate(), assumed by the algorithms):
/// alpha > 2, beta >= 1, noise >= 0, n >= 1, all ids distinct,
/// every link has positive length and finite coordinates.
struct LinkInstance {
  std::vector<Link> links;
  ModelKind model = ModelKind::Directed;
  double alpha = 3.0;
  double beta = 1.0;
  double noise = 0.0;

  std::size_t size() const { return links.size(); }
  std::optional<std::size_t> index_of(std::int64_t id) const;
  const Link& link_by_id(std::int64_t id) const;
};

/// Link-to-link distance. Directed: sender of `from` to receiver of `to`.
/// Bidirectional: minimum over all four node pairings (symmetric).
double asym_distance(const LinkInstance& inst, const Link& from, const Link& to);

/// Ratio of the longest to the shortest link length (>= 1).
double length_diversity(const LinkInstance& inst);

/// Every violated instance invariant, as one message each; empty means ok.
std::vector<std::string> validate(const LinkInstance& inst);

}  // namespace sinr
