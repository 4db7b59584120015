#include "hodge/lambda1.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hodge/geometry.hpp"
#include "hodge/laplacian.hpp"
#include "hodge/parallel.hpp"

namespace hodge {

namespace {

std::vector<Lambda1Branch> branches_for(Group g)
{
  if (g == Group::SU2) {
    return {Lambda1Branch::coexact_a, Lambda1Branch::coexact_b, Lambda1Branch::coexact_c, Lambda1Branch::exact};
  }
  return {Lambda1Branch::coexact_a, Lambda1Branch::coexact_b, Lambda1Branch::coexact_c};
}

double block_minimum(int k, const MetricParams & m)
{
  return eigenvalues(assemble_delta1(WeightIndex(k), m)).front();
}

}  // namespace

std::string_view to_string(Lambda1Branch b)
{
  switch (b) {
  case Lambda1Branch::coexact_a: return "coexact_a";
  case Lambda1Branch::coexact_b: return "coexact_b";
  case Lambda1Branch::coexact_c: return "coexact_c";
  case Lambda1Branch::exact: return "exact";
  }
  return "exact";
}

double branch_value(Lambda1Branch b, const MetricParams & m)
{
  const auto [x, y, z] = m.squares();
  switch (b) {
  case Lambda1Branch::coexact_a: return 4.0 * y * z / x;
  case Lambda1Branch::coexact_b: return 4.0 * x * z / y;
  case Lambda1Branch::coexact_c: return 4.0 * x * y / z;
  case Lambda1Branch::exact: return x + y + z;
  }
  return 0.0;
}

Lambda1Result lambda1_formula(const MetricParams & m)
{
  const auto branches = branches_for(m.group());
  double best = std::numeric_limits<double>::infinity();
  for (auto b : branches) { best = std::min(best, branch_value(b, m)); }

  Lambda1Result res;
  res.value = best;
  res.numerical_min = std::numeric_limits<double>::quiet_NaN();
  for (auto b : branches) {
    if (branch_value(b, m) - best <= 1e-12 * best) { res.tied_branches.push_back(b); }
  }
  const bool exact_tied =
    std::find(res.tied_branches.begin(), res.tied_branches.end(), Lambda1Branch::exact) != res.tied_branches.end();
  res.attaining_branch = exact_tied ? Lambda1Branch::exact : res.tied_branches.front();
  return res;
}

double gershgorin_bound(WeightIndex weight, const MetricParams & m)
{
  const int k = weight.value();
  const double a = m.a(), b = m.b(), c = m.c();
  const auto [x, y, z] = m.squares();
  const auto weitz = weitzenbock_diagonal(m);
  const auto gam = christoffel(m);

  double bound = std::numeric_limits<double>::infinity();
  for (int r = 0; r <= k; ++r) {
    const double kr = k - 2.0 * r;
    const double casimir_diag = x * kr * kr + (y + z) * (k * (2.0 * r + 1.0) - 2.0 * r * r);
    const double A = std::abs(2.0 * a * kr * gam.gamma1);
    const double Bp = r + 1 <= k ? std::abs(2.0 * c * (r + 1.0) * gam.gamma3) : 0.0;
    const double Cp = r + 1 <= k ? std::abs(2.0 * b * (r + 1.0) * gam.gamma2) : 0.0;
    const double Bm = r >= 1 ? std::abs(2.0 * c * (k - r + 1.0) * gam.gamma3) : 0.0;
    const double Cm = r >= 1 ? std::abs(2.0 * b * (k - r + 1.0) * gam.gamma2) : 0.0;
    const double E = r >= 2 ? std::abs((y - z) * (k - r + 1.0) * (k - r + 2.0)) : 0.0;
    const double F = r + 2 <= k ? std::abs((y - z) * (r + 2.0) * (r + 1.0)) : 0.0;

    const double radius[3] = {Bp + Cp + Bm + Cm + E + F, A + Bp + Bm + E + F, A + Cp + Cm + E + F};
    for (int p = 0; p < 3; ++p) { bound = std::min(bound, casimir_diag + weitz[p] - radius[p]); }
  }
  return bound < 0.0 ? vacuous_bound : bound;
}

Lambda1Result certify_lambda1(const MetricParams & m, const CertifyOptions & opts)
{
  if (opts.k_probe < 1) { throw DomainError("k_probe must be at least 1"); }
  auto res = lambda1_formula(m);
  const double candidate = res.value;

  std::vector<int> weights;
  for (int k = 0; k <= opts.k_probe; ++k) {
    if (weight_contributes(m.group(), k)) { weights.push_back(k); }
  }
  std::vector<double> bounds(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) { bounds[i] = gershgorin_bound(WeightIndex(weights[i]), m); }

  // Longest tail [i0, end) on which the bound beats the candidate and is non-decreasing.
  std::optional<std::size_t> tail_start;
  if (bounds.back() > candidate * (1.0 + opts.margin)) {
    std::size_t i = bounds.size() - 1;
    while (i > 0 && bounds[i - 1] > candidate && bounds[i - 1] <= bounds[i]) { --i; }
    tail_start = i;
  }

  auto check_block = [&](int k, double block_min) {
    if (block_min < candidate - opts.tolerance * candidate) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "block k=" << k << " has eigenvalue " << block_min << " below the closed-form lambda1 " << candidate
          << " at (" << m.a() << ", " << m.b() << ", " << m.c() << ")";
      throw ConjectureViolation(msg.str());
    }
    if (block_min < res.numerical_min || std::isnan(res.numerical_min)) {
      res.numerical_min = block_min;
      res.numerical_argmin_k = k;
    }
  };

  if (tail_start) {
    const int k0 = weights[*tail_start];
    // Weights 0 and 1 carry the closed-form values and are always diagonalised.
    for (int k : weights) {
      if (k >= std::max(k0, 2)) { break; }
      check_block(k, block_minimum(k, m));
      res.k_searched = k;
    }
    GershgorinCertificate cert;
    cert.k0 = k0;
    cert.bound_at_k0 = bounds[*tail_start];
    cert.candidate_min = candidate;
    for (std::size_t i = 0; i < weights.size(); ++i) { cert.per_k_bounds.emplace_back(weights[i], bounds[i]); }
    res.certificate = std::move(cert);
    res.certified = std::abs(res.numerical_min - candidate) <= opts.tolerance * candidate;
    if (!res.certified) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "closed-form lambda1 " << candidate << " not attained below k0=" << k0 << " (numerical minimum "
          << res.numerical_min << ")";
      throw ConsistencyError(msg.str());
    }
    return res;
  }

  for (std::size_t i = 0; i < weights.size(); ++i) {
    const int k = weights[i];
    res.k_searched = k;
    if (k >= 2 && bounds[i] >= res.numerical_min) { continue; }
    check_block(k, block_minimum(k, m));
  }
  res.certified = false;
  return res;
}

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index) : engine_(seed ^ index) {}

double SampleStream::uniform(double lo, double hi)
{
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

StressReport stress_test(const StressOptions & opts)
{
  if (opts.samples < 1) { throw DomainError("stress test needs at least one sample"); }
  if (opts.k_max < 0) { throw DomainError("k_max must be non-negative"); }
  if (!(opts.lo > 0.0) || !(opts.hi >= opts.lo)) { throw DomainError("sampling box must satisfy 0 < lo <= hi"); }

  struct Outcome
  {
    std::array<double, 3> metric{};
    double numerical_min = 0.0;
    double formula = 0.0;
    int argmin_k = 0;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(opts.samples));

  parallel_for(outcomes.size(), opts.workers, [&](std::size_t i) {
    Outcome & o = outcomes[i];
    if (opts.forced_metric) {
      o.metric = *opts.forced_metric;
    } else {
      SampleStream rng(opts.seed, i);
      for (double & s : o.metric) { s = rng.uniform(opts.lo, opts.hi); }
    }
    const MetricParams m(o.metric[0], o.metric[1], o.metric[2], opts.group);
    o.formula = lambda1_formula(m).value;
    o.numerical_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= opts.k_max; ++k) {
      if (!weight_contributes(opts.group, k)) { continue; }
      const double v = block_minimum(k, m);
      if (v < o.numerical_min) {
        o.numerical_min = v;
        o.argmin_k = k;
      }
    }
  });

  StressReport report;
  report.options = opts;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto & o = outcomes[i];
    const double dev = std::abs(o.numerical_min - o.formula) / o.formula;
    report.max_rel_dev = std::max(report.max_rel_dev, dev);
    ++report.argmin_k_histogram[o.argmin_k];
    report.argmin_k.push_back(o.argmin_k);

    const bool weight_ok = o.argmin_k == 0 || (opts.group == Group::SU2 && o.argmin_k == 1);
    std::string reason;
    if (o.numerical_min < o.formula * (1.0 - opts.tolerance)) {
      reason = "numerical minimum below formula";
    } else if (dev > opts.tolerance) {
      reason = "numerical minimum deviates from formula";
    } else if (!weight_ok) {
      reason = "minimum attained outside the expected weights";
    }
    if (!reason.empty()) {
      report.violations.push_back({static_cast<int>(i), o.metric, o.numerical_min, o.formula, o.argmin_k, reason});
    }
  }
  return report;
}

}  // namespace hodge
