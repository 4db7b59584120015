#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hodge/metric.hpp"
#include "hodge/su2_rep.hpp"

namespace hodge {

/// Raised when a numerically computed spectrum undercuts the closed-form
/// first eigenvalue.
class ConjectureViolation : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Which closed form attains λ₁: the three left-invariant coexact values
/// 4b²c²/a², 4a²c²/b², 4a²b²/c², or the exact value a² + b² + c².
enum class Lambda1Branch { coexact_a, coexact_b, coexact_c, exact };
std::string_view to_string(Lambda1Branch b);

double branch_value(Lambda1Branch b, const MetricParams & m);

struct GershgorinCertificate
{
  int k0 = 0;
  double bound_at_k0 = 0.0;
  double candidate_min = 0.0;
  std::vector<std::pair<int, double>> per_k_bounds;
};

struct Lambda1Result
{
  double value = 0.0;
  Lambda1Branch attaining_branch = Lambda1Branch::exact;
  /// Every branch within 1e-12 (relative) of the minimum.
  std::vector<Lambda1Branch> tied_branches;
  bool certified = false;
  int k_searched = 0;
  /// Minimum over the blocks actually diagonalised (NaN if none were).
  double numerical_min = 0.0;
  int numerical_argmin_k = -1;
  std::optional<GershgorinCertificate> certificate;
};

/// Closed-form λ₁(Δ₁): minimum of the four branches on SU(2), of the three
/// coexact branches on SO(3).
Lambda1Result lambda1_formula(const MetricParams & m);

/// Sentinel for a vacuous (negative) Gershgorin bound.
inline constexpr double vacuous_bound = -std::numeric_limits<double>::infinity();

/// min over rows (r,p) of D_{r,p} − Σ|off-diagonal|, from the closed-form
/// entries without assembling the block. Returns vacuous_bound when negative.
double gershgorin_bound(WeightIndex k, const MetricParams & m);

struct CertifyOptions
{
  int k_probe = 200;
  /// bound(k_probe) must exceed candidate·(1 + margin).
  double margin = 0.5;
  double tolerance = 1e-8;
};

/// Tries to show that blocks k ≥ k0 cannot undercut λ₁ and diagonalises
/// the finitely many blocks below k0. Without a threshold the blocks up to
/// k_probe are searched instead (skipping blocks whose bound already
/// exceeds the running minimum) and `certified` is false.
/// Throws ConjectureViolation if any block undercuts the formula.
Lambda1Result certify_lambda1(const MetricParams & m, const CertifyOptions & opts = {});

/// Deterministic per-sample stream: mt19937_64 seeded with seed ⊕ index,
/// uniform doubles from the top 53 bits.
class SampleStream
{
public:
  SampleStream(std::uint64_t seed, std::uint64_t index);
  double uniform(double lo, double hi);

private:
  std::mt19937_64 engine_;
};

struct StressOptions
{
  std::uint64_t seed = 1;
  int samples = 1000;
  int k_max = 10;
  double lo = 0.1;
  double hi = 10.0;
  Group group = Group::SU2;
  double tolerance = 1e-8;
  int workers = 0;
  /// Replace random sampling by this metric (single-sample runs).
  std::optional<std::array<double, 3>> forced_metric;
};

struct StressViolation
{
  int index = 0;
  std::array<double, 3> metric{};
  double numerical_min = 0.0;
  double formula = 0.0;
  int argmin_k = 0;
  std::string reason;
};

struct StressReport
{
  StressOptions options;
  std::vector<StressViolation> violations;
  double max_rel_dev = 0.0;
  std::map<int, int> argmin_k_histogram;
  /// Per-sample arg-min weights, in sample order.
  std::vector<int> argmin_k;
  bool pass() const { return violations.empty(); }
};

/// Compares min over blocks k ≤ k_max against lambda1_formula for seeded
/// random metrics in [lo, hi]³; the minimum must sit at weight 0 or 1
/// (weight 0 for SO(3)).
StressReport stress_test(const StressOptions & opts);

}  // namespace hodge
