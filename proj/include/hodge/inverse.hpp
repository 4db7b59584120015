#pragma once

#include <array>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hodge/metric.hpp"

namespace hodge {

/// No reconstruction branch reproduces the given invariants.
class InconsistentInvariants : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Two non-isometric metrics reproduce the same invariants.
class AmbiguousInversion : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct SpectralInvariants
{
  double volume = 0.0;
  double scal = 0.0;
  double lambda1 = 0.0;
  Group group = Group::SU2;
  /// Optional: ‖Ric‖² (recoverable from the 1-form a₂ coefficient and Scal).
  /// Used only to separate candidates that agree on volume, Scal and λ₁.
  std::optional<double> norm_ric2;
  std::optional<double> norm_r2;
};

/// Curvature combinations entering the heat coefficients (the universal
/// proportionality constants are not applied).
struct HeatInvariants
{
  SpectralInvariants invariants;
  /// 5/2 Scal² − ‖Ric‖² + ‖R‖², the a₂ combination for functions.
  double a2_functions = 0.0;
  /// −45/2 Scal² + 87‖Ric‖² − 12‖R‖², the a₂ combination for 1-forms.
  double a2_one_forms = 0.0;
};

HeatInvariants heat_invariants(const MetricParams & m);

enum class InversionBranch { exact_min, coexact_min };
std::string_view to_string(InversionBranch b);

struct InversionResidual
{
  double volume = 0.0;
  double scal = 0.0;
  double lambda1 = 0.0;
  /// NaN unless ‖Ric‖² was needed to pick between candidates.
  double norm_ric2 = std::numeric_limits<double>::quiet_NaN();
};

struct InversionResult
{
  std::array<double, 3> abc_sorted{};  // descending
  InversionBranch branch = InversionBranch::exact_min;
  InversionResidual residuals;
  /// Elementary symmetric polynomials of (a², b², c²) for the result.
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double sigma3 = 0.0;
  bool newton_inequalities = false;
  /// Number of non-isometric candidates matching volume, Scal and λ₁.
  int candidates = 1;
  bool ricci_disambiguated = false;
};

struct InvertOptions
{
  double tolerance = 1e-8;
};

/// Recovers (a, b, c) up to permutation from volume, Scal and λ₁. Both the
/// exact-branch (λ₁ = σ₁, Vieta cubic) and coexact-branch (λ₁ = 4σ₃/x²,
/// quadratic in y + z) reconstructions are attempted and validated by
/// forward evaluation. Volume, Scal and λ₁ alone occasionally admit two
/// non-isometric solutions; ‖Ric‖², when supplied, then selects one.
InversionResult invert(const SpectralInvariants & si, const InvertOptions & opts = {});

/// Real roots of t³ + c2 t² + c1 t + c0, ascending, each polished by a
/// Newton step. Complex roots with |Im| ≤ imag_tol·|root| count as real.
std::vector<double> real_cubic_roots(double c2, double c1, double c0, double imag_tol = 1e-9);

}  // namespace hodge
