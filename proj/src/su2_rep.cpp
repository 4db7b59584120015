#include "hodge/su2_rep.hpp"

#include <cmath>
#include <complex>

namespace hodge {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

WeightIndex::WeightIndex(int k) : k_(k)
{
  if (k < 0) { throw DomainError("representation weight must be non-negative, got " + std::to_string(k)); }
}

bool weight_contributes(Group g, int k)
{
  return g == Group::SU2 || k % 2 == 0;
}

Eigen::MatrixXd casimir_matrix(WeightIndex weight, const MetricParams & m)
{
  const int k = weight.value();
  const int n = weight.dim();
  const auto [x, y, z] = m.squares();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r <= k; ++r) {
    const double kr = k - 2.0 * r;
    C(r, r) = -(x * kr * kr + (y + z) * (k * (2.0 * r + 1.0) - 2.0 * r * r));
    if (r + 2 <= k) { C(r, r + 2) = (y - z) * (r + 2.0) * (r + 1.0); }
    if (r - 2 >= 0) { C(r, r - 2) = (y - z) * (k - r + 1.0) * (k - r + 2.0); }
  }
  return C;
}

GeneratorMatrices generators(WeightIndex weight, const MetricParams & m)
{
  const int k = weight.value();
  const int n = weight.dim();
  GeneratorMatrices g;
  g.k = k;
  g.dE1 = Eigen::MatrixXcd::Zero(n, n);
  g.dE2 = Eigen::MatrixXcd::Zero(n, n);
  g.dE3 = Eigen::MatrixXcd::Zero(n, n);
  for (int l = 0; l <= k; ++l) {
    g.dE1(l, l) = double(k - 2 * l) * I;
    if (l - 1 >= 0) {
      g.dE2(l - 1, l) = -double(l);
      g.dE3(l - 1, l) = -double(l) * I;
    }
    if (l + 1 <= k) {
      g.dE2(l + 1, l) = double(k - l);
      g.dE3(l + 1, l) = -double(k - l) * I;
    }
  }
  g.dX1 = m.a() * g.dE1;
  g.dX2 = m.b() * g.dE2;
  g.dX3 = m.c() * g.dE3;
  g.casimir = casimir_matrix(weight, m);
  return g;
}

Eigen::VectorXd orthonormal_scaling(WeightIndex weight)
{
  const int k = weight.value();
  Eigen::VectorXd S(weight.dim());
  const double lk = std::lgamma(k + 1.0);
  for (int r = 0; r <= k; ++r) {
    S(r) = std::exp(0.5 * (std::lgamma(r + 1.0) + std::lgamma(k - r + 1.0) - lk));
  }
  return S;
}

Eigen::MatrixXcd conjugate_by_scaling(const Eigen::MatrixXcd & M, const Eigen::VectorXd & S, int block)
{
  const Eigen::Index n = M.rows();
  Eigen::MatrixXcd H(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double sj = S(j / block);
    for (Eigen::Index i = 0; i < n; ++i) {
      H(i, j) = M(i, j) * (S(i / block) / sj);
    }
  }
  return H;
}

}  // namespace hodge
