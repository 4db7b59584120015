#include "hodge/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "hodge/geometry.hpp"
#include "hodge/lambda1.hpp"

namespace hodge {

namespace {

double relative_error(double got, double want, double scale)
{
  return std::abs(got - want) / std::max(std::abs(want), scale);
}

struct Candidate
{
  std::array<double, 3> abc{};
  InversionBranch branch;
  InversionResidual residuals;
};

// Forward-evaluates a candidate of squared scalings and checks the branch.
std::optional<Candidate> validate(std::array<double, 3> squares, InversionBranch branch, const SpectralInvariants & si,
                                  double tol)
{
  for (double s : squares) {
    if (!(s > 0.0) || !std::isfinite(s)) { return std::nullopt; }
  }
  std::sort(squares.begin(), squares.end(), std::greater<>());
  const MetricParams m(std::sqrt(squares[0]), std::sqrt(squares[1]), std::sqrt(squares[2]), si.group);
  const auto l1 = lambda1_formula(m);
  const double sigma1 = squares[0] + squares[1] + squares[2];

  Candidate c;
  c.abc = {m.a(), m.b(), m.c()};
  c.branch = branch;
  c.residuals.volume = relative_error(volume(m), si.volume, 0.0);
  c.residuals.scal = relative_error(curvature(m).scal, si.scal, sigma1);
  c.residuals.lambda1 = relative_error(l1.value, si.lambda1, 0.0);
  c.residuals.norm_ric2 = std::numeric_limits<double>::quiet_NaN();
  if (c.residuals.volume > tol || c.residuals.scal > tol || c.residuals.lambda1 > tol) { return std::nullopt; }

  // The candidate's own minimum must come from the branch used to build it;
  // ties are accepted up to the reconstruction tolerance.
  const double exact_value = branch_value(Lambda1Branch::exact, m);
  const double coexact_value = std::min({branch_value(Lambda1Branch::coexact_a, m),
                                         branch_value(Lambda1Branch::coexact_b, m),
                                         branch_value(Lambda1Branch::coexact_c, m)});
  const double own = branch == InversionBranch::exact_min ? exact_value : coexact_value;
  if (own > l1.value * (1.0 + tol)) { return std::nullopt; }
  return c;
}

std::vector<std::array<double, 3>> exact_branch(double sigma1, double sigma3, double scal)
{
  // Near a multiple root, rounding in the inputs moves the roots by a cube
  // root of the perturbation and can make them slightly complex. Real parts
  // are kept here; forward validation rejects anything that does not fit.
  const double disc = sigma3 * (8.0 * sigma1 - scal) / 2.0;
  if (disc < -1e-12 * sigma3 * sigma1) { return {}; }
  const double sigma2 = std::sqrt(std::max(disc, 0.0));
  const auto roots = real_cubic_roots(-sigma1, sigma2, -sigma3, 1e-3);
  if (roots.size() != 3) { return {}; }
  return {{roots[0], roots[1], roots[2]}};
}

std::vector<std::array<double, 3>> coexact_branch(double lambda1, double sigma3, double scal)
{
  // λ₁ = 4yz/x = 4σ₃/x²; with p = yz and s = y + z the scalar curvature
  // 8(x + s) − 2(xs + p)²/(xp) gives 2x²s² − 4xp·s + (2p² − 8x²p + Scal·xp) = 0.
  const double x = 2.0 * std::sqrt(sigma3 / lambda1);
  const double p = sigma3 / x;
  const double qa = 2.0 * x * x;
  const double qb = -4.0 * x * p;
  const double qc = 2.0 * p * p - 8.0 * x * x * p + scal * x * p;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) { return {}; }

  std::vector<std::array<double, 3>> out;
  const double root = std::sqrt(disc);
  // Numerically stable pair of quadratic roots.
  const double q = -0.5 * (qb + std::copysign(root, qb));
  std::vector<double> sums{q / qa};
  if (q != 0.0) { sums.push_back(qc / q); }
  for (double s : sums) {
    const double d = s * s - 4.0 * p;
    if (!(s > 0.0) || d < -1e-12 * s * s) { continue; }
    const double half = 0.5 * std::sqrt(std::max(d, 0.0));
    const double y = 0.5 * s + half;
    const double z = p / y;  // y·z = p exactly
    out.push_back({x, y, z});
  }
  return out;
}

}  // namespace

std::string_view to_string(InversionBranch b)
{
  return b == InversionBranch::exact_min ? "exact_min" : "coexact_min";
}

HeatInvariants heat_invariants(const MetricParams & m)
{
  const auto k = curvature(m);
  HeatInvariants h;
  h.invariants.volume = volume(m);
  h.invariants.scal = k.scal;
  h.invariants.lambda1 = lambda1_formula(m).value;
  h.invariants.group = m.group();
  h.invariants.norm_ric2 = k.norm_ric2;
  h.invariants.norm_r2 = k.norm_r2;
  const double s2 = k.scal * k.scal;
  h.a2_functions = 2.5 * s2 - k.norm_ric2 + k.norm_r2;
  h.a2_one_forms = -22.5 * s2 + 87.0 * k.norm_ric2 - 12.0 * k.norm_r2;
  return h;
}

std::vector<double> real_cubic_roots(double c2, double c1, double c0, double imag_tol)
{
  const double shift = -c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;

  std::vector<double> roots;
  bool three_real = false;
  if (p < 0.0) {
    const double arg = (3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p);
    if (std::abs(arg) <= 1.0 + 1e-9) {
      const double theta = std::acos(std::clamp(arg, -1.0, 1.0)) / 3.0;
      const double amp = 2.0 * std::sqrt(-p / 3.0);
      for (int k = 0; k < 3; ++k) {
        roots.push_back(amp * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) + shift);
      }
      three_real = true;
    }
  }
  auto P = [&](double t) { return ((t + c2) * t + c1) * t + c0; };
  auto dP = [&](double t) { return (3.0 * t + 2.0 * c2) * t + c1; };
  auto polish = [&](double & t) {
    const double d = dP(t);
    if (d != 0.0) {
      const double polished = t - P(t) / d;
      if (std::abs(P(polished)) <= std::abs(P(t))) { t = polished; }
    }
  };

  if (three_real) {
    for (double & t : roots) { polish(t); }
  } else {
    const double D = std::max(0.0, q * q / 4.0 + p * p * p / 27.0);
    double real_root = std::cbrt(-q / 2.0 + std::sqrt(D)) + std::cbrt(-q / 2.0 - std::sqrt(D)) + shift;
    polish(real_root);
    roots.push_back(real_root);
    // Deflate to t² + e t + f; the pair's real part keeps the root sum exact.
    const double e = c2 + real_root;
    const double f = c1 + real_root * e;
    const double re = -e / 2.0;
    const double im = std::sqrt(std::max(0.0, f - e * e / 4.0));
    if (im <= imag_tol * std::hypot(re, im)) {
      roots.push_back(re);
      roots.push_back(re);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

InversionResult invert(const SpectralInvariants & si, const InvertOptions & opts)
{
  if (!(si.volume > 0.0) || !(si.lambda1 > 0.0) || !std::isfinite(si.scal)) {
    throw DomainError("invariants need volume > 0, lambda1 > 0 and finite scalar curvature");
  }
  const double ratio = base_volume(si.group) / si.volume;
  const double sigma3 = ratio * ratio;

  std::vector<Candidate> accepted;
  if (si.group == Group::SU2) {
    for (const auto & sq : exact_branch(si.lambda1, sigma3, si.scal)) {
      if (auto c = validate(sq, InversionBranch::exact_min, si, opts.tolerance)) { accepted.push_back(*c); }
    }
  }
  for (const auto & sq : coexact_branch(si.lambda1, sigma3, si.scal)) {
    if (auto c = validate(sq, InversionBranch::coexact_min, si, opts.tolerance)) { accepted.push_back(*c); }
  }
  if (accepted.empty()) { throw InconsistentInvariants("no reconstruction branch reproduces the invariants"); }

  // Collapse candidates that agree up to the reconstruction tolerance.
  std::vector<Candidate> distinct;
  for (const auto & c : accepted) {
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Candidate & d) {
      for (int i = 0; i < 3; ++i) {
        if (std::abs(c.abc[i] - d.abc[i]) > 1e-7 * d.abc[0]) { return false; }
      }
      return true;
    });
    if (!seen) { distinct.push_back(c); }
  }
  const int n_candidates = static_cast<int>(distinct.size());
  bool by_ricci = false;
  if (distinct.size() > 1 && si.norm_ric2) {
    std::vector<Candidate> kept;
    for (auto c : distinct) {
      const MetricParams m(c.abc[0], c.abc[1], c.abc[2], si.group);
      c.residuals.norm_ric2 = relative_error(curvature(m).norm_ric2, *si.norm_ric2, 0.0);
      if (c.residuals.norm_ric2 <= opts.tolerance) { kept.push_back(c); }
    }
    if (kept.empty()) { throw InconsistentInvariants("no candidate reproduces the supplied Ricci norm"); }
    distinct = std::move(kept);
    by_ricci = true;
  }
  if (distinct.size() > 1) {
    const auto & p = distinct[0];
    const auto & q = distinct[1];
    std::ostringstream msg;
    msg.precision(17);
    msg << "invariants admit non-isometric metrics (" << p.abc[0] << ", " << p.abc[1] << ", " << p.abc[2] << ") and ("
        << q.abc[0] << ", " << q.abc[1] << ", " << q.abc[2] << ")";
    throw AmbiguousInversion(msg.str());
  }
  const auto & best = distinct.front();

  InversionResult r;
  r.abc_sorted = best.abc;
  r.branch = best.branch;
  r.residuals = best.residuals;
  r.candidates = n_candidates;
  r.ricci_disambiguated = by_ricci;
  const double x = best.abc[0] * best.abc[0], y = best.abc[1] * best.abc[1], z = best.abc[2] * best.abc[2];
  r.sigma1 = x + y + z;
  r.sigma2 = x * y + y * z + z * x;
  r.sigma3 = x * y * z;
  r.newton_inequalities = r.sigma1 * r.sigma1 >= 3.0 * r.sigma2 * (1.0 - 1e-12)
                          && r.sigma2 * r.sigma2 >= 3.0 * r.sigma1 * r.sigma3 * (1.0 - 1e-12);
  return r;
}

}  // namespace hodge
