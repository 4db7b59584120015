#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "hodge/metric.hpp"

namespace hodge {

/// c1 E1* + c2 E2* + c3 E3*.
struct LeftInvariantForm
{
  std::array<std::complex<double>, 3> coefficients{};

  static LeftInvariantForm basis(int i);
};

/// c1 E2*∧E3* + c2 E3*∧E1* + c3 E1*∧E2*.
struct LeftInvariantTwoForm
{
  std::array<std::complex<double>, 3> coefficients{};
};

/// T = diag(a², b², c²) on the E_i* frame, or its inverse.
LeftInvariantForm apply_T(const LeftInvariantForm & f, const MetricParams & m, bool inverse = false);

/// Exterior derivative: dE1* = −2 E2*∧E3* and cyclic.
LeftInvariantTwoForm exterior_derivative(const LeftInvariantForm & f);

/// Hodge stars of g_(a,b,c), computed in the orthonormal coframe E_i*/scale.
LeftInvariantTwoForm hodge_star(const LeftInvariantForm & f, const MetricParams & m);
LeftInvariantForm hodge_star(const LeftInvariantTwoForm & w, const MetricParams & m);

/// Curl₀ = *₀d on left-invariant forms, i.e. −2·Id.
LeftInvariantForm curl_round(const LeftInvariantForm & f);

/// Curl_g = abc·T⁻¹·Curl₀: coefficients scale by (−2bc/a, −2ac/b, −2ab/c).
LeftInvariantForm curl_g_on_invariant(const LeftInvariantForm & f, const MetricParams & m);

struct CoexactBoundReport
{
  int k_max = 0;
  double bound = 0.0;
  double min_coexact = 0.0;
  int min_coexact_k = -1;
  bool attained_at_k0 = false;
  /// (k, eigenvalue) pairs below bound − tolerance.
  std::vector<std::pair<int, double>> violations;
  bool pass() const { return violations.empty() && attained_at_k0; }
};

/// Every coexact Δ₁ eigenvalue with k ≤ k_max is at least
/// min(4b²c²/a², 4a²c²/b², 4a²b²/c²), with equality in the k = 0 block.
CoexactBoundReport coexact_bound_check(const MetricParams & m, int k_max, double tolerance = 1e-8);

struct RoundCurlReport
{
  int k_max = 0;
  double max_integer_deviation = 0.0;
  /// (k, √λ) pairs for every coexact eigenvalue of the round metric.
  std::vector<std::pair<int, double>> curl_moduli;
  bool pass = false;
};

/// At the round metric, √λ of every coexact eigenvalue is an integer
/// (k + 2 or k), the modulus of a Curl₀ eigenvalue.
RoundCurlReport round_curl_spectrum(int k_max, double tolerance = 1e-8);

}  // namespace hodge
