#include "hodge/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "hodge/geometry.hpp"
#include "hodge/parallel.hpp"

namespace hodge {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

// Absolute eigenvalue resolution of the symmetric solver, relative to ‖M‖.
constexpr double solver_resolution = 1e-12;

Eigen::VectorXd block_scaling(const WeightBlockMatrix & M)
{
  return orthonormal_scaling(WeightIndex(M.k));
}

struct HermitianForm
{
  Eigen::MatrixXcd H;
  Eigen::VectorXd S;
  int block = 1;
  double norm = 0.0;
};

HermitianForm hermitian_form(const WeightBlockMatrix & M)
{
  HermitianForm f;
  f.block = M.degree == 1 ? 3 : 1;
  f.S = block_scaling(M);
  f.H = conjugate_by_scaling(M.entries, f.S, f.block);
  f.norm = f.H.norm();
  const double residual = (f.H - f.H.adjoint()).norm();
  if (residual > 1e-8 * std::max(f.norm, std::numeric_limits<double>::min())) {
    std::ostringstream msg;
    msg << "weight-" << M.k << " degree-" << M.degree << " block is not Hermitian after scaling (residual "
        << residual << ", norm " << f.norm << ")";
    throw ConsistencyError(msg.str());
  }
  f.H = 0.5 * (f.H + f.H.adjoint());
  return f;
}

Eigen::MatrixXd real_embedding(const Eigen::MatrixXcd & H)
{
  const Eigen::Index n = H.rows();
  Eigen::MatrixXd R(2 * n, 2 * n);
  R.topLeftCorner(n, n) = H.real();
  R.topRightCorner(n, n) = -H.imag();
  R.bottomLeftCorner(n, n) = H.imag();
  R.bottomRightCorner(n, n) = H.real();
  return R;
}

// Indices 0, 2, 4, ... of the doubled spectrum, after checking each pair.
std::vector<Eigen::Index> pair_representatives(const Eigen::VectorXd & doubled, double norm, int k)
{
  const Eigen::Index n = doubled.size() / 2;
  std::vector<Eigen::Index> picks;
  picks.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double gap = std::abs(doubled(2 * i + 1) - doubled(2 * i));
    if (gap >= 1e-10 * std::max(norm, 1.0)) {
      std::ostringstream msg;
      msg << "weight-" << k << " block: embedded eigenvalues do not pair (gap " << gap << ")";
      throw ConsistencyError(msg.str());
    }
    picks.push_back(2 * i);
  }
  return picks;
}

void check_residual(const WeightBlockMatrix & M, double lambda, const Eigen::VectorXcd & v)
{
  const double scale = matrix_norm(M) * v.norm();
  const double residual = (M.entries * v - lambda * v).norm();
  if (residual > 1e-8 * std::max(scale, std::numeric_limits<double>::min())) {
    std::ostringstream msg;
    msg << "weight-" << M.k << " eigenpair residual " << residual << " exceeds tolerance for eigenvalue " << lambda;
    throw ConsistencyError(msg.str());
  }
}

}  // namespace

std::string_view to_string(SpectrumTag t)
{
  switch (t) {
  case SpectrumTag::exact: return "exact";
  case SpectrumTag::coexact: return "coexact";
  case SpectrumTag::harmonic: return "harmonic";
  case SpectrumTag::untagged: return "untagged";
  }
  return "untagged";
}

WeightBlockMatrix assemble_delta1(WeightIndex weight, const MetricParams & m)
{
  const int k = weight.value();
  const double a = m.a(), b = m.b(), c = m.c();
  const auto [x, y, z] = m.squares();
  const auto weitz = weitzenbock_diagonal(m);
  const auto gam = christoffel(m);

  WeightBlockMatrix M;
  M.k = k;
  M.degree = 1;
  M.entries = Eigen::MatrixXcd::Zero(3 * (k + 1), 3 * (k + 1));
  auto at = [&](int r, int p, int s, int q) -> std::complex<double> & {
    return M.entries(WeightBlockMatrix::index(r, p), WeightBlockMatrix::index(s, q));
  };

  for (int r = 0; r <= k; ++r) {
    const double kr = k - 2.0 * r;
    const double casimir_diag = x * kr * kr + (y + z) * (k * (2.0 * r + 1.0) - 2.0 * r * r);
    for (int p = 1; p <= 3; ++p) { at(r, p, r, p) = casimir_diag + weitz[p - 1]; }

    // M_r: A_r couples X2* and X3* inside the same P_r.
    const std::complex<double> A = -2.0 * a * I * kr * gam.gamma1;
    at(r, 2, r, 3) = A;
    at(r, 3, r, 2) = -A;

    // K_r^+ (block r, r+1).
    if (r + 1 <= k) {
      const std::complex<double> B = 2.0 * I * c * (r + 1.0) * gam.gamma3;
      const double C = 2.0 * b * (r + 1.0) * gam.gamma2;
      at(r, 1, r + 1, 2) = B;
      at(r, 1, r + 1, 3) = C;
      at(r, 2, r + 1, 1) = -B;
      at(r, 3, r + 1, 1) = -C;
    }
    // K_r^- (block r, r-1).
    if (r - 1 >= 0) {
      const std::complex<double> B = 2.0 * I * c * (k - r + 1.0) * gam.gamma3;
      const double C = -2.0 * b * (k - r + 1.0) * gam.gamma2;
      at(r, 1, r - 1, 2) = B;
      at(r, 1, r - 1, 3) = C;
      at(r, 2, r - 1, 1) = -B;
      at(r, 3, r - 1, 1) = -C;
    }
    // E_r (block r, r-2) and F_r (block r, r+2) are scalar multiples of Id_3.
    if (r - 2 >= 0) {
      const double E = -(y - z) * (k - r + 1.0) * (k - r + 2.0);
      for (int p = 1; p <= 3; ++p) { at(r, p, r - 2, p) = E; }
    }
    if (r + 2 <= k) {
      const double F = -(y - z) * (r + 2.0) * (r + 1.0);
      for (int p = 1; p <= 3; ++p) { at(r, p, r + 2, p) = F; }
    }
  }
  return M;
}

WeightBlockMatrix assemble_delta0(WeightIndex weight, const MetricParams & m)
{
  WeightBlockMatrix M;
  M.k = weight.value();
  M.degree = 0;
  M.entries = (-casimir_matrix(weight, m)).cast<std::complex<double>>();
  return M;
}

double matrix_norm(const WeightBlockMatrix & M)
{
  return M.entries.norm();
}

std::vector<double> eigenvalues(const WeightBlockMatrix & M, const EigenOptions & opts)
{
  if (opts.verify) { return eigen_decomposition(M).values; }

  const auto form = hermitian_form(M);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real_embedding(form.H), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) { throw ConsistencyError("symmetric eigensolver did not converge"); }
  const Eigen::VectorXd & doubled = solver.eigenvalues();  // ascending

  std::vector<double> values;
  for (auto i : pair_representatives(doubled, form.norm, M.k)) { values.push_back(doubled(i)); }
  return values;
}

EigenDecomposition eigen_decomposition(const WeightBlockMatrix & M)
{
  const auto form = hermitian_form(M);
  const Eigen::Index n = form.H.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real_embedding(form.H));
  if (solver.info() != Eigen::Success) { throw ConsistencyError("symmetric eigensolver did not converge"); }
  const Eigen::VectorXd & doubled = solver.eigenvalues();
  const Eigen::MatrixXd & vecs = solver.eigenvectors();

  EigenDecomposition out;
  out.vectors.resize(n, n);
  Eigen::Index col = 0;
  for (auto i : pair_representatives(doubled, form.norm, M.k)) {
    // [x; y] ↦ x + i·y is an eigenvector of H; undo the scaling for M.
    Eigen::VectorXcd u = vecs.col(i).head(n).cast<std::complex<double>>() + I * vecs.col(i).tail(n);
    for (Eigen::Index row = 0; row < n; ++row) { u(row) /= form.S(row / form.block); }
    u.normalize();
    check_residual(M, doubled(i), u);
    out.values.push_back(doubled(i));
    out.vectors.col(col++) = u;
  }
  return out;
}

std::vector<std::pair<double, int>> cluster_sorted(const std::vector<double> & sorted, double merge_tol, double floor)
{
  std::vector<std::pair<double, int>> clusters;
  for (double v : sorted) {
    if (!clusters.empty()) {
      auto & [rep, count] = clusters.back();
      if (std::abs(v - rep) <= merge_tol * std::max(1.0, std::abs(rep)) + floor) {
        ++count;
        continue;
      }
    }
    clusters.emplace_back(v, 1);
  }
  return clusters;
}

double Spectrum::min_above(double floor) const
{
  for (const auto & e : entries) {
    if (e.eigenvalue > floor) { return e.eigenvalue; }
  }
  return std::numeric_limits<double>::infinity();
}

std::vector<std::pair<double, int>> Spectrum::merged(double merge_tol) const
{
  std::vector<std::pair<double, int>> out;
  for (const auto & e : entries) {
    if (!out.empty() && std::abs(e.eigenvalue - out.back().first) <= merge_tol * std::max(1.0, out.back().first)) {
      out.back().second += e.multiplicity;
    } else {
      out.emplace_back(e.eigenvalue, e.multiplicity);
    }
  }
  return out;
}

Spectrum full_spectrum(const MetricParams & m, int degree, int k_max, const SpectrumOptions & opts)
{
  if (k_max < 0) { throw DomainError("k_max must be non-negative"); }
  if (degree != 0 && degree != 1) { throw DomainError("form degree must be 0 or 1"); }

  std::vector<int> weights;
  for (int k = 0; k <= k_max; ++k) {
    if (weight_contributes(m.group(), k)) { weights.push_back(k); }
  }

  std::vector<std::vector<SpectrumEntry>> per_weight(weights.size());
  parallel_for(weights.size(), opts.workers, [&](std::size_t idx) {
    const int k = weights[idx];
    const WeightIndex w(k);
    const auto d0 = assemble_delta0(w, m);
    const auto ev0 = eigenvalues(d0);
    auto & out = per_weight[idx];

    if (degree == 0) {
      const double floor = solver_resolution * matrix_norm(d0);
      for (auto [value, count] : cluster_sorted(ev0, opts.merge_tol, floor)) {
        const auto tag = std::abs(value) <= floor + opts.merge_tol ? SpectrumTag::harmonic : SpectrumTag::untagged;
        out.push_back({value, count * (k + 1), k, 0, tag});
      }
      return;
    }

    const auto d1 = assemble_delta1(w, m);
    const double floor = solver_resolution * matrix_norm(d1);
    const auto functions = cluster_sorted(ev0, opts.merge_tol, floor);
    for (auto [value, count] : cluster_sorted(eigenvalues(d1), opts.merge_tol, floor)) {
      int exact = 0;
      for (auto [fvalue, fcount] : functions) {
        const bool nonzero = std::abs(fvalue) > floor + opts.merge_tol;
        if (nonzero && std::abs(fvalue - value) <= opts.merge_tol * std::max(1.0, std::abs(value)) + floor) {
          exact += fcount;
        }
      }
      exact = std::min(exact, count);
      if (exact > 0) { out.push_back({value, exact * (k + 1), k, 1, SpectrumTag::exact}); }
      if (count > exact) { out.push_back({value, (count - exact) * (k + 1), k, 1, SpectrumTag::coexact}); }
    }
  });

  Spectrum spec{{}, k_max, m, degree};
  for (auto & v : per_weight) { spec.entries.insert(spec.entries.end(), v.begin(), v.end()); }
  std::stable_sort(spec.entries.begin(), spec.entries.end(), [](const SpectrumEntry & l, const SpectrumEntry & r) {
    return l.eigenvalue != r.eigenvalue ? l.eigenvalue < r.eigenvalue : l.k < r.k;
  });
  return spec;
}

}  // namespace hodge
