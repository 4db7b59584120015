#include "hodge/curl.hpp"

#include <algorithm>
#include <cmath>

#include "hodge/geometry.hpp"
#include "hodge/laplacian.hpp"

namespace hodge {

LeftInvariantForm LeftInvariantForm::basis(int i)
{
  LeftInvariantForm f;
  f.coefficients.at(static_cast<std::size_t>(i)) = 1.0;
  return f;
}

LeftInvariantForm apply_T(const LeftInvariantForm & f, const MetricParams & m, bool inverse)
{
  const auto sq = m.squares();
  LeftInvariantForm out;
  for (int i = 0; i < 3; ++i) { out.coefficients[i] = inverse ? f.coefficients[i] / sq[i] : f.coefficients[i] * sq[i]; }
  return out;
}

LeftInvariantTwoForm exterior_derivative(const LeftInvariantForm & f)
{
  LeftInvariantTwoForm w;
  for (int i = 0; i < 3; ++i) { w.coefficients[i] = -2.0 * f.coefficients[i]; }
  return w;
}

LeftInvariantTwoForm hodge_star(const LeftInvariantForm & f, const MetricParams & m)
{
  // *(E_i*/s_i) = (E_j*/s_j)∧(E_k*/s_k) for (i, j, k) cyclic.
  const auto s = m.scales();
  const double abc = s[0] * s[1] * s[2];
  LeftInvariantTwoForm w;
  for (int i = 0; i < 3; ++i) { w.coefficients[i] = f.coefficients[i] * (s[i] * s[i] / abc); }
  return w;
}

LeftInvariantForm hodge_star(const LeftInvariantTwoForm & w, const MetricParams & m)
{
  // *((E_j*/s_j)∧(E_k*/s_k)) = E_i*/s_i.
  const auto s = m.scales();
  const double abc = s[0] * s[1] * s[2];
  LeftInvariantForm f;
  for (int i = 0; i < 3; ++i) { f.coefficients[i] = w.coefficients[i] * (abc / (s[i] * s[i])); }
  return f;
}

LeftInvariantForm curl_round(const LeftInvariantForm & f)
{
  return hodge_star(exterior_derivative(f), MetricParams(1.0, 1.0, 1.0));
}

LeftInvariantForm curl_g_on_invariant(const LeftInvariantForm & f, const MetricParams & m)
{
  auto out = apply_T(curl_round(f), m, /*inverse=*/true);
  const double abc = m.a() * m.b() * m.c();
  for (auto & c : out.coefficients) { c *= abc; }
  return out;
}

CoexactBoundReport coexact_bound_check(const MetricParams & m, int k_max, double tolerance)
{
  if (k_max < 1) { throw DomainError("coexact bound check needs k_max >= 1"); }
  const auto weitz = weitzenbock_diagonal(m);

  CoexactBoundReport report;
  report.k_max = k_max;
  report.bound = *std::min_element(weitz.begin(), weitz.end());
  report.min_coexact = std::numeric_limits<double>::infinity();

  const auto spec = full_spectrum(m, 1, k_max);
  for (const auto & e : spec.entries) {
    if (e.tag != SpectrumTag::coexact) { continue; }
    if (e.eigenvalue < report.min_coexact) {
      report.min_coexact = e.eigenvalue;
      report.min_coexact_k = e.k;
    }
    if (e.eigenvalue < report.bound - tolerance * std::max(1.0, report.bound)) {
      report.violations.emplace_back(e.k, e.eigenvalue);
    }
    if (e.k == 0 && std::abs(e.eigenvalue - report.bound) <= tolerance * std::max(1.0, report.bound)) {
      report.attained_at_k0 = true;
    }
  }
  return report;
}

RoundCurlReport round_curl_spectrum(int k_max, double tolerance)
{
  RoundCurlReport report;
  report.k_max = k_max;
  const auto spec = full_spectrum(MetricParams(1.0, 1.0, 1.0), 1, k_max);
  bool all_ok = true;
  for (const auto & e : spec.entries) {
    if (e.tag != SpectrumTag::coexact) { continue; }
    const double modulus = std::sqrt(e.eigenvalue);
    const double dev = std::abs(modulus - std::round(modulus));
    const auto n = static_cast<long>(std::round(modulus));
    report.max_integer_deviation = std::max(report.max_integer_deviation, dev);
    report.curl_moduli.emplace_back(e.k, modulus);
    all_ok = all_ok && dev <= tolerance && (n == e.k + 2 || (n == e.k && e.k >= 2));
  }
  report.pass = all_ok && !report.curl_moduli.empty();
  return report;
}

}  // namespace hodge
