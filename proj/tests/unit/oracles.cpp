#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

Table structure_constants(const hodge::MetricParams & m)
{
  const auto s = m.scales();
  Table c{};
  // [X_i, X_j] = s_i s_j [E_i, E_j] = 2 s_i s_j E_k = (2 s_i s_j / s_k) X_k, (i, j, k) cyclic.
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const double v = 2.0 * s[i] * s[j] / s[k];
    c[i][j][k] = v;
    c[j][i][k] = -v;
  }
  return c;
}

Table koszul_christoffel(const hodge::MetricParams & m)
{
  const auto c = structure_constants(m);
  Table g{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) { g[i][j][k] = 0.5 * (c[i][j][k] - c[j][k][i] + c[k][i][j]); }
    }
  }
  return g;
}

namespace {

// (N_i)_{k,j} = <∇_{X_i} X_j, X_k>: ∇_{X_i} as a matrix on frame coefficients.
std::array<Eigen::Matrix3d, 3> connection_matrices(const hodge::MetricParams & m)
{
  const auto g = koszul_christoffel(m);
  std::array<Eigen::Matrix3d, 3> N;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) { N[i](k, j) = g[i][j][k]; }
    }
  }
  return N;
}

}  // namespace

std::array<double, 3> sectional_curvatures(const hodge::MetricParams & m)
{
  const auto N = connection_matrices(m);
  const auto c = structure_constants(m);
  auto R = [&](int i, int j) {
    Eigen::Matrix3d r = N[i] * N[j] - N[j] * N[i];
    for (int l = 0; l < 3; ++l) { r -= c[i][j][l] * N[l]; }
    return r;
  };
  // K(X_i, X_j) = <R(X_i, X_j) X_j, X_i>.
  const std::array<std::pair<int, int>, 3> planes{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<double, 3> K{};
  for (int p = 0; p < 3; ++p) {
    const auto [i, j] = planes[p];
    K[p] = R(i, j)(i, j);
  }
  return K;
}

std::array<double, 3> connection_laplacian_diagonal(const hodge::MetricParams & m)
{
  const auto N = connection_matrices(m);
  Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
  // On 1-forms ∇_X acts by −Nᵀ on coframe coefficients.
  for (const auto & n : N) { C += n.transpose() * n.transpose(); }
  return {C(0, 0), C(1, 1), C(2, 2)};
}

std::array<Eigen::MatrixXcd, 3> polynomial_generators(int k)
{
  // Defining matrices of E1, E2, E3 in su(2), pre-composed with the rotation by π
  // about E3 so that the basis P_l = z^l w^(k−l) carries the standard weights.
  Eigen::Matrix2cd E1, E2, E3;
  E1 << -I, 0.0, 0.0, I;
  E2 << 0.0, 1.0, -1.0, 0.0;
  E3 << 0.0, -I, -I, 0.0;

  std::array<Eigen::MatrixXcd, 3> out;
  const std::array<Eigen::Matrix2cd, 3> X{E1, E2, E3};
  for (int g = 0; g < 3; ++g) {
    // d/dt P_l((z, w)·exp(tX)) = ∂_z P_l·(z X11 + w X21) + ∂_w P_l·(z X12 + w X22).
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(k + 1, k + 1);
    const auto & x = X[g];
    for (int l = 0; l <= k; ++l) {
      M(l, l) += static_cast<double>(l) * x(0, 0) + static_cast<double>(k - l) * x(1, 1);
      if (l >= 1) { M(l - 1, l) += static_cast<double>(l) * x(1, 0); }
      if (l + 1 <= k) { M(l + 1, l) += static_cast<double>(k - l) * x(0, 1); }
    }
    out[g] = M;
  }
  return out;
}

Eigen::MatrixXcd delta0_from_generators(int k, const hodge::MetricParams & m)
{
  const auto E = polynomial_generators(k);
  const auto s = m.scales();
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(k + 1, k + 1);
  for (int i = 0; i < 3; ++i) { C += (s[i] * E[i]) * (s[i] * E[i]); }
  return -C;
}

Eigen::MatrixXcd delta1_weitzenbock(int k, const hodge::MetricParams & m)
{
  const auto E = polynomial_generators(k);
  const auto s = m.scales();
  const auto sq = m.squares();
  const auto g = koszul_christoffel(m);
  const Eigen::MatrixXcd minus_casimir = delta0_from_generators(k, m);
  const std::array<double, 3> weitz{4.0 * sq[1] * sq[2] / sq[0], 4.0 * sq[0] * sq[2] / sq[1],
                                    4.0 * sq[0] * sq[1] / sq[2]};
  const int n = 3 * (k + 1);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r <= k; ++r) {
    for (int t = 0; t <= k; ++t) {
      for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
          cd v = p == q ? minus_casimir(r, t) : cd{0.0};
          for (int i = 0; i < 3; ++i) { v -= 2.0 * s[i] * E[i](r, t) * g[i][q][p]; }
          if (r == t && p == q) { v += weitz[p]; }
          M(3 * r + p, 3 * t + q) = v;
        }
      }
    }
  }
  return M;
}

std::vector<double> general_eigenvalues(const Eigen::MatrixXcd & M)
{
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) { out.push_back(es.eigenvalues()(i).real()); }
  std::sort(out.begin(), out.end());
  return out;
}

double gershgorin_row_scan(const Eigen::MatrixXcd & M)
{
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j != i) { radius += std::abs(M(i, j)); }
    }
    best = std::min(best, M(i, i).real() - radius);
  }
  return best;
}

std::array<double, 2> k1_coclosed(const hodge::MetricParams & m)
{
  const auto [a2, b2, c2] = m.squares();
  const double a4 = a2 * a2, b4 = b2 * b2, c4 = c2 * c2;
  const double den = a2 * b2 * c2;
  const double base = (2.0 * a4 * b4 + (2.0 * a4 + a2 * b2 + 2.0 * b4) * c4 + (a4 * b2 + a2 * b4) * c2) / den;
  const double rad = std::sqrt(a4 * b4 + (a4 - a2 * b2 + b4) * c4 - (a4 * b2 + a2 * b4) * c2);
  const double spread = 2.0 * rad * (a2 * b2 + (a2 + b2) * c2) / den;
  return {base - spread, base + spread};
}

Eigen::MatrixXcd k1_displayed(const hodge::MetricParams & m)
{
  const auto [A, B, C] = m.squares();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(6, 6);
  const double d1 = A + B + C + 4.0 * B * C / A;
  const double d2 = A + B + C + 4.0 * A * C / B;
  const double d3 = A + B + C + 4.0 * A * B / C;
  M(0, 0) = d1;
  M(0, 4) = I * (2.0 * B - 2.0 * B * C / A - 2.0 * C);
  M(0, 5) = 2.0 * B + 2.0 * B * C / A - 2.0 * C;
  M(1, 1) = d2;
  M(1, 2) = I * (2.0 * A + 2.0 * A * C / B - 2.0 * C);
  M(1, 3) = I * (-2.0 * A + 2.0 * A * C / B + 2.0 * C);
  M(2, 1) = I * (-2.0 * A + 2.0 * B - 2.0 * A * B / C);
  M(2, 2) = d3;
  M(2, 3) = 2.0 * A - 2.0 * B - 2.0 * A * B / C;
  M(3, 1) = I * (2.0 * B - 2.0 * B * C / A - 2.0 * C);
  M(3, 2) = -2.0 * B - 2.0 * B * C / A + 2.0 * C;
  M(3, 3) = d1;
  M(4, 0) = I * (-2.0 * A + 2.0 * A * C / B + 2.0 * C);
  M(4, 4) = d2;
  M(4, 5) = I * (-2.0 * A - 2.0 * A * C / B + 2.0 * C);
  M(5, 0) = -2.0 * A + 2.0 * B + 2.0 * A * B / C;
  M(5, 4) = I * (2.0 * A - 2.0 * B + 2.0 * A * B / C);
  M(5, 5) = d3;
  return M;
}

bool close(double x, double y, double tol, double floor)
{
  return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), floor});
}

double max_rel_diff(std::vector<double> x, std::vector<double> y)
{
  if (x.size() != y.size()) { return std::numeric_limits<double>::infinity(); }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double scale = std::max({std::abs(x[i]), std::abs(y[i]), 1e-300});
    worst = std::max(worst, std::abs(x[i] - y[i]) / scale);
  }
  return worst;
}

}  // namespace oracle
