#include "sinr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace sinr {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double link_length(const Link& v) { return distance(v.sender, v.receiver); }

const char* model_name(ModelKind m) {
  return m == ModelKind::Directed ? "directed" : "bidirectional";
}

std::optional<std::size_t> LinkInstance::index_of(std::int64_t id) const {
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (links[i].id == id) return i;
  }
  return std::nullopt;
}

const Link& LinkInstance::link_by_id(std::int64_t id) const {
  auto idx = index_of(id);
  if (!idx) throw std::invalid_argument("unknown link id " + std::to_string(id));
  return links[*idx];
}

double asym_distance(const LinkInstance& inst, const Link& from, const Link& to) {
  if (inst.model == ModelKind::Directed) return distance(from.sender, to.receiver);
  return std::min(std::min(distance(from.sender, to.receiver), distance(from.sender, to.sender)),
                  std::min(distance(from.receiver, to.receiver), distance(from.receiver, to.sender)));
}

double length_diversity(const LinkInstance& inst) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const Link& v : inst.links) {
    double l = link_length(v);
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  return hi / lo;
}

std::vector<std::string> validate(const LinkInstance& inst) {
  std::vector<std::string> out;
  if (inst.links.empty()) out.push_back("instance must contain at least one link");
  if (!(inst.alpha > 2.0)) out.push_back("alpha must exceed 2");
  if (!(inst.beta >= 1.0)) out.push_back("beta must be at least 1");
  if (!(inst.noise >= 0.0)) out.push_back("noise must be nonnegative");
  std::set<std::int64_t> seen;
  for (const Link& v : inst.links) {
    if (!seen.insert(v.id).second)
      out.push_back("duplicate link id " + std::to_string(v.id));
    if (!std::isfinite(v.sender.x) || !std::isfinite(v.sender.y) ||
        !std::isfinite(v.receiver.x) || !std::isfinite(v.receiver.y))
      out.push_back("link " + std::to_string(v.id) + " has non-finite coordinates");
    else if (!(link_length(v) > 0.0))
      out.push_back("link " + std::to_string(v.id) + " length must be positive");
  }
  return out;
}

}  // namespace sinr
