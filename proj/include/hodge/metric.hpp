#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hodge {

/// Thrown for parameters outside an operation's domain (non-positive metric
/// scalings, negative weights, ...).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Thrown when an internal cross-check fails; indicates an assembly or
/// transcription bug rather than bad input.
class ConsistencyError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

enum class Group { SU2, SO3 };

std::string_view to_string(Group g);
Group parse_group(std::string_view s);

/// Left-invariant metric g_(a,b,c) on SU(2) or SO(3): {aE1, bE2, cE3} is
/// orthonormal. Construction validates a, b, c > 0.
class MetricParams
{
public:
  MetricParams(double a, double b, double c, Group group = Group::SU2);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  Group group() const { return group_; }

  /// (a, b, c) as an array, index 0 ↔ X1.
  std::array<double, 3> scales() const { return {a_, b_, c_}; }
  /// (a², b², c²).
  std::array<double, 3> squares() const { return {a_ * a_, b_ * b_, c_ * c_}; }

  MetricParams with_group(Group g) const { return {a_, b_, c_, g}; }

  /// Apply an index permutation: result scale i = scale perm[i].
  MetricParams permuted(const std::array<int, 3> & perm) const;

private:
  double a_;
  double b_;
  double c_;
  Group group_;
};

}  // namespace hodge
