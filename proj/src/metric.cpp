#include "hodge/metric.hpp"

#include <cmath>

namespace hodge {

std::string_view to_string(Group g)
{
  return g == Group::SU2 ? "su2" : "so3";
}

Group parse_group(std::string_view s)
{
  if (s == "su2" || s == "SU2") { return Group::SU2; }
  if (s == "so3" || s == "SO3") { return Group::SO3; }
  throw DomainError("unknown group '" + std::string(s) + "' (expected su2 or so3)");
}

MetricParams::MetricParams(double a, double b, double c, Group group)
    : a_(a), b_(b), c_(c), group_(group)
{
  for (double v : {a, b, c}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw DomainError("metric parameters must be finite and positive, got (" + std::to_string(a) + ", "
                        + std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  }
}

MetricParams MetricParams::permuted(const std::array<int, 3> & perm) const
{
  std::array<bool, 3> seen{};
  for (int i : perm) {
    if (i < 0 || i > 2 || seen[static_cast<std::size_t>(i)]) { throw DomainError("not a permutation of {0, 1, 2}"); }
    seen[static_cast<std::size_t>(i)] = true;
  }
  const auto s = scales();
  return {s[perm[0]], s[perm[1]], s[perm[2]], group_};
}

}  // namespace hodge
