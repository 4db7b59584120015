#include "hodge/berger.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "hodge/laplacian.hpp"

namespace hodge {

namespace {
constexpr std::complex<double> I{0.0, 1.0};

double mixed_radical(int k, int j, const BergerParams & p)
{
  const double a2 = p.a() * p.a(), b2 = p.b() * p.b();
  const double kj = k - 2.0 * j;
  return std::sqrt(a2 * a2 * kj * kj + a2 * b2 * (2.0 * k + 4.0 * j * (k - j)) + b2 * b2);
}

// Adds coef·P_r ⊗ (X2 + s·i·X3) to the coefficient vector; s = ±1.
void add_circular(Eigen::VectorXcd & v, int r, std::complex<double> coef, int s)
{
  v(WeightBlockMatrix::index(r, 2)) += coef;
  v(WeightBlockMatrix::index(r, 3)) += coef * (double(s) * I);
}
}  // namespace

BergerParams::BergerParams(double a, double b) : a_(a), b_(b)
{
  if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0) || !(b > 0.0)) {
    throw DomainError("Berger parameters must be finite and positive");
  }
}

BergerParams BergerParams::from_metric(const MetricParams & m, double tol)
{
  if (std::abs(m.b() - m.c()) > tol * std::max(m.b(), m.c())) {
    throw DomainError("Berger metric requires b = c");
  }
  return {m.a(), m.b()};
}

std::string_view to_string(BergerFamily f)
{
  switch (f) {
  case BergerFamily::nu: return "nu";
  case BergerFamily::mu_edge: return "mu_edge";
  case BergerFamily::mu_pm: return "mu_pm";
  }
  return "nu";
}

std::string BergerEigenvalue::label() const
{
  std::ostringstream s;
  switch (family) {
  case BergerFamily::nu: s << "nu(" << k << "," << j << ")"; break;
  case BergerFamily::mu_edge: s << "mu(" << k << "," << j << ")"; break;
  case BergerFamily::mu_pm: s << "mu" << (sign > 0 ? "+" : "-") << "(" << k << "," << j << ")"; break;
  }
  return s.str();
}

std::string BergerEigenvector::label() const
{
  std::ostringstream s;
  switch (kind) {
  case BergerVectorKind::v: s << "v(" << k << "," << j << ")"; break;
  case BergerVectorKind::w_edge: s << "w(" << k << "," << j << ")"; break;
  case BergerVectorKind::w_pm: s << "w" << (sign > 0 ? "+" : "-") << "(" << k << "," << j << ")"; break;
  }
  return s.str();
}

double berger_nu(int k, int j, const BergerParams & p)
{
  const double kj = k - 2.0 * j;
  return p.a() * p.a() * kj * kj + p.b() * p.b() * ((4.0 * j + 2.0) * k - 4.0 * j * j);
}

double berger_mu_edge(int k, int j, const BergerParams & p)
{
  const double a2 = p.a() * p.a(), b2 = p.b() * p.b();
  if (j == -1 || j == k + 1) { return (k + 2.0) * (k + 2.0) * a2; }
  if (j == 0 || j == k) { return k * k * a2 + 4.0 * k * b2 + 4.0 * b2 * b2 / a2; }
  throw DomainError("mu_edge is defined for j in {-1, 0, k, k+1}");
}

double berger_mu_pm(int k, int j, int sign, const BergerParams & p)
{
  const double a2 = p.a() * p.a(), b2 = p.b() * p.b();
  const double nu = berger_nu(k, j, p);
  return nu + 2.0 * b2 * b2 / a2 + sign * 2.0 * (b2 / a2) * std::sqrt(a2 * nu + b2 * b2);
}

double berger_mu_pm_compact(int k, int j, int sign, const BergerParams & p)
{
  const double kappa = p.kappa();
  const double root = std::sqrt(berger_nu(k, j, p) + kappa) + sign * std::sqrt(kappa);
  return root * root;
}

std::vector<BergerEigenvalue> berger_block_spectrum(WeightIndex weight, const BergerParams & p)
{
  const int k = weight.value();
  const double a2 = p.a() * p.a(), b2 = p.b() * p.b();
  std::vector<BergerEigenvalue> out;

  if (k == 0) {
    // Left-invariant forms: 4a² on X2*, X3* and 4b⁴/a² on X1*.
    out.push_back({BergerFamily::mu_edge, 0, -1, 0, 4.0 * a2, 1});
    out.push_back({BergerFamily::mu_edge, 0, 1, 0, 4.0 * a2, 1});
    out.push_back({BergerFamily::mu_edge, 0, 0, 0, 4.0 * b2 * b2 / a2, 1});
    return out;
  }
  if (k == 1) {
    out.push_back({BergerFamily::mu_edge, 1, -1, 0, 9.0 * a2, 2});
    out.push_back({BergerFamily::mu_edge, 1, 0, 0, a2 + 4.0 * b2 + 4.0 * b2 * b2 / a2, 2});
    out.push_back({BergerFamily::nu, 1, 0, 0, a2 + 2.0 * b2, 2});
    return out;
  }

  for (int j = 0; j <= k; ++j) { out.push_back({BergerFamily::nu, k, j, 0, berger_nu(k, j, p), 1}); }
  for (int j : {-1, 0, k, k + 1}) { out.push_back({BergerFamily::mu_edge, k, j, 0, berger_mu_edge(k, j, p), 1}); }
  for (int j = 1; j <= k - 1; ++j) {
    for (int sign : {1, -1}) { out.push_back({BergerFamily::mu_pm, k, j, sign, berger_mu_pm(k, j, sign, p), 1}); }
  }
  return out;
}

std::vector<double> berger_block_values(WeightIndex k, const BergerParams & p)
{
  std::vector<double> values;
  for (const auto & e : berger_block_spectrum(k, p)) { values.insert(values.end(), e.multiplicity_in_block, e.value); }
  std::sort(values.begin(), values.end());
  return values;
}

MixedCoefficients berger_mixed_coefficients(int k, int j, int sign, const BergerParams & p)
{
  const double a = p.a(), b = p.b();
  const double a2 = a * a, b2 = b * b;
  const double kj = k - 2.0 * j;
  const double R = mixed_radical(k, j, p);

  MixedCoefficients c;
  c.alpha = (2.0 * kj * kj * a2 + (2.0 * k + 4.0 * j * (k - j)) * b2 + sign * (-2.0) * kj * R)
            / (4.0 * (k - j + 1.0) * b2);
  c.beta = (-a2 * kj + b2 + sign * R) / (a * b);
  c.gamma = k - j;
  return c;
}

std::vector<BergerEigenvector> berger_eigenvectors(WeightIndex weight, const BergerParams & p)
{
  const int k = weight.value();
  if (k < 2) { throw DomainError("closed-form Berger eigenvectors require k >= 2"); }
  const int n = 3 * (k + 1);
  const double ba = p.b() / p.a();
  std::vector<BergerEigenvector> out;

  auto fresh = [n] { return Eigen::VectorXcd::Zero(n).eval(); };

  for (int j = 0; j <= k; ++j) {
    auto v = fresh();
    if (j - 1 >= 0) { add_circular(v, j - 1, I * (j * ba), +1); }
    v(WeightBlockMatrix::index(j, 1)) += double(k - 2 * j);
    if (j + 1 <= k) { add_circular(v, j + 1, -I * ((k - j) * ba), -1); }
    out.push_back({BergerVectorKind::v, k, j, 0, berger_nu(k, j, p), std::move(v)});
  }

  {
    auto w = fresh();
    add_circular(w, 0, 1.0, -1);
    out.push_back({BergerVectorKind::w_edge, k, -1, 0, berger_mu_edge(k, -1, p), std::move(w)});
  }
  {
    auto w = fresh();
    w(WeightBlockMatrix::index(0, 1)) += 2.0 * ba;
    add_circular(w, 1, I * double(k), -1);
    out.push_back({BergerVectorKind::w_edge, k, 0, 0, berger_mu_edge(k, 0, p), std::move(w)});
  }
  {
    auto w = fresh();
    add_circular(w, k - 1, I * double(k), +1);
    w(WeightBlockMatrix::index(k, 1)) += 2.0 * ba;
    out.push_back({BergerVectorKind::w_edge, k, k, 0, berger_mu_edge(k, k, p), std::move(w)});
  }
  {
    auto w = fresh();
    add_circular(w, k, 1.0, +1);
    out.push_back({BergerVectorKind::w_edge, k, k + 1, 0, berger_mu_edge(k, k + 1, p), std::move(w)});
  }

  for (int j = 1; j <= k - 1; ++j) {
    for (int sign : {1, -1}) {
      const auto c = berger_mixed_coefficients(k, j, sign, p);
      auto w = fresh();
      add_circular(w, j - 1, I * c.alpha, +1);
      w(WeightBlockMatrix::index(j, 1)) += c.beta;
      add_circular(w, j + 1, I * c.gamma, -1);
      out.push_back({BergerVectorKind::w_pm, k, j, sign, berger_mu_pm(k, j, sign, p), std::move(w)});
    }
  }
  return out;
}

EigenvectorReport verify_eigenvectors(WeightIndex weight, const BergerParams & p, double tolerance)
{
  const auto M = assemble_delta1(weight, p.metric());
  const double norm = matrix_norm(M);

  EigenvectorReport report;
  report.k = weight.value();
  report.tolerance = tolerance;
  for (const auto & vec : berger_eigenvectors(weight, p)) {
    const auto & w = vec.coefficients;
    const double rel = (M.entries * w - vec.eigenvalue * w).norm() / (norm * w.norm());
    const bool ok = rel <= tolerance;
    report.residuals.push_back({vec.label(), vec.eigenvalue, rel, ok});
    report.max_relative_residual = std::max(report.max_relative_residual, rel);
    if (!ok) { report.failures.push_back(vec.label()); }
  }
  return report;
}

double berger_first_eigenvalue(const BergerParams & p, Group g)
{
  const double a2 = p.a() * p.a(), b2 = p.b() * p.b();
  const double coexact = std::min(4.0 * b2 * b2 / a2, 4.0 * a2);
  return g == Group::SU2 ? std::min(a2 + 2.0 * b2, coexact) : coexact;
}

}  // namespace hodge
