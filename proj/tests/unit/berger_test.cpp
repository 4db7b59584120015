#include <cmath>

#include <gtest/gtest.h>

#include "hodge/berger.hpp"
#include "hodge/lambda1.hpp"
#include "hodge/laplacian.hpp"
#include "oracles.hpp"

using namespace hodge;

namespace {

std::vector<BergerParams> random_berger(int n, std::uint64_t seed, double lo, double hi)
{
  std::vector<BergerParams> out;
  for (int i = 0; i < n; ++i) {
    SampleStream rng(seed, static_cast<std::uint64_t>(i));
    const double a = rng.uniform(lo, hi);
    const double b = rng.uniform(lo, hi);
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

TEST(BergerParams, KappaAndMetric)
{
  const BergerParams p(2.0, 3.0);
  EXPECT_DOUBLE_EQ(p.kappa(), 81.0 / 4.0);
  EXPECT_EQ(p.metric().scales(), (std::array<double, 3>{2.0, 3.0, 3.0}));
  EXPECT_THROW(BergerParams::from_metric(MetricParams(1.0, 1.0, 1.5)), DomainError);
  EXPECT_NO_THROW(BergerParams::from_metric(MetricParams(1.0, 2.0, 2.0)));
}

TEST(BergerSpectrum, WeightZeroRound)
{
  EXPECT_EQ(berger_block_values(WeightIndex(0), BergerParams(1.0, 1.0)), (std::vector<double>{4, 4, 4}));
}

TEST(BergerSpectrum, WeightTwoRound)
{
  const auto v = berger_block_values(WeightIndex(2), BergerParams(1.0, 1.0));
  EXPECT_LT(oracle::max_rel_diff(v, {4, 8, 8, 8, 16, 16, 16, 16, 16}), 1e-14);
}

TEST(BergerSpectrum, WeightThreeSubstitution)
{
  const BergerParams p(1.0, 2.0);
  EXPECT_DOUBLE_EQ(berger_nu(3, 1, p), 57.0);
  EXPECT_NEAR(berger_mu_pm(3, 1, +1, p), 89.0 + 8.0 * std::sqrt(73.0), 1e-12);
  EXPECT_NEAR(berger_mu_pm(3, 1, -1, p), 89.0 - 8.0 * std::sqrt(73.0), 1e-12);
}

TEST(BergerSpectrum, EdgeValues)
{
  const BergerParams p(1.5, 0.7);
  const double a = p.a(), k2 = std::sqrt(p.kappa());
  for (int k = 2; k <= 6; ++k) {
    EXPECT_NEAR(berger_mu_edge(k, -1, p), (k + 2) * (k + 2) * a * a, 1e-12);
    EXPECT_NEAR(berger_mu_edge(k, k + 1, p), (k + 2) * (k + 2) * a * a, 1e-12);
    EXPECT_NEAR(berger_mu_edge(k, 0, p), std::pow(k * a + 2.0 * k2, 2), 1e-11);
    EXPECT_NEAR(berger_mu_edge(k, k, p), std::pow(k * a + 2.0 * k2, 2), 1e-11);
  }
}

TEST(BergerSpectrum, BlockSizes)
{
  const BergerParams p(0.8, 1.9);
  for (int k = 0; k <= 10; ++k) {
    EXPECT_EQ(berger_block_values(WeightIndex(k), p).size(), static_cast<std::size_t>(3 * (k + 1)));
  }
}

TEST(BergerSpectrum, MatchesNumericalBlocks)
{
  for (const auto & p : random_berger(30, 31, 0.1, 10.0)) {
    for (int k = 0; k <= 25; k += (k < 6 ? 1 : 4)) {
      const auto num = eigenvalues(assemble_delta1(WeightIndex(k), p.metric()));
      EXPECT_LT(oracle::max_rel_diff(num, berger_block_values(WeightIndex(k), p)), 1e-8)
        << "k=" << k << " a=" << p.a() << " b=" << p.b();
    }
  }
}

TEST(BergerSpectrum, NuIsFunctionSpectrum)
{
  const BergerParams p(1.3, 0.45);
  for (int k = 1; k <= 8; ++k) {
    std::vector<double> nu;
    for (int j = 0; j <= k; ++j) { nu.push_back(berger_nu(k, j, p)); }
    const auto d0 = eigenvalues(assemble_delta0(WeightIndex(k), p.metric()));
    EXPECT_LT(oracle::max_rel_diff(nu, d0), 1e-10) << "k=" << k;
  }
}

TEST(BergerSpectrum, CompactForm)
{
  for (const auto & p : random_berger(100, 32, 0.1, 10.0)) {
    for (int k = 2; k <= 12; ++k) {
      for (int j = 1; j <= k - 1; ++j) {
        for (int s : {1, -1}) {
          EXPECT_TRUE(oracle::close(berger_mu_pm(k, j, s, p), berger_mu_pm_compact(k, j, s, p), 1e-12, 1e-300));
        }
      }
    }
  }
}

TEST(BergerFirstEigenvalue, Examples)
{
  EXPECT_DOUBLE_EQ(berger_first_eigenvalue(BergerParams(1.0, 1.0), Group::SU2), 3.0);
  EXPECT_DOUBLE_EQ(berger_first_eigenvalue(BergerParams(2.0, 1.0), Group::SU2), 1.0);
  EXPECT_DOUBLE_EQ(berger_first_eigenvalue(BergerParams(1.0, 1.0), Group::SO3), 4.0);
}

TEST(BergerFirstEigenvalue, AgreesWithGeneralFormula)
{
  for (const auto & p : random_berger(100, 33, 0.1, 10.0)) {
    for (auto g : {Group::SU2, Group::SO3}) {
      EXPECT_NEAR(berger_first_eigenvalue(p, g), lambda1_formula(p.metric(g)).value,
                  1e-12 * berger_first_eigenvalue(p, g));
    }
  }
}

TEST(BergerFirstEigenvalue, CollapseDecreases)
{
  double previous = std::numeric_limits<double>::infinity();
  for (double b : {1.0, 0.5, 0.25, 0.125}) {
    const double v = berger_first_eigenvalue(BergerParams(1.0, b), Group::SU2);
    EXPECT_LT(v, previous);
    if (b <= 0.5) { EXPECT_DOUBLE_EQ(v, 4.0 * b * b * b * b); }
    previous = v;
  }
}

TEST(BergerEigenvectors, RoundWeightFourNu)
{
  const auto rep = verify_eigenvectors(WeightIndex(4), BergerParams(1.0, 1.0), 1e-10);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.residuals.size(), 15u);
}

TEST(BergerEigenvectors, EdgeVectorWeightThree)
{
  const BergerParams p(2.0, 1.0);
  const auto vecs = berger_eigenvectors(WeightIndex(3), p);
  const auto M = assemble_delta1(WeightIndex(3), p.metric());
  bool seen = false;
  for (const auto & v : vecs) {
    if (v.kind != BergerVectorKind::w_edge || v.j != -1) { continue; }
    seen = true;
    EXPECT_DOUBLE_EQ(v.eigenvalue, 100.0);
    // P_0 ⊗ (X2 − iX3).
    EXPECT_EQ(v.coefficients(WeightBlockMatrix::index(0, 2)), std::complex<double>(1.0, 0.0));
    EXPECT_EQ(v.coefficients(WeightBlockMatrix::index(0, 3)), std::complex<double>(0.0, -1.0));
    const Eigen::VectorXcd r = M.entries * v.coefficients - v.eigenvalue * v.coefficients;
    EXPECT_LT(r.norm(), 1e-10 * v.coefficients.norm() * M.entries.norm());
  }
  EXPECT_TRUE(seen);
}

TEST(BergerEigenvectors, MixedFamily)
{
  const BergerParams p(1.0, 2.0);
  const auto mc = berger_mixed_coefficients(5, 2, +1, p);
  EXPECT_DOUBLE_EQ(mc.gamma, 3.0);
  const auto rep = verify_eigenvectors(WeightIndex(5), p);
  EXPECT_TRUE(rep.pass());
  EXPECT_LT(rep.max_relative_residual, 1e-8);
}

TEST(BergerEigenvectors, RandomParameters)
{
  for (const auto & p : random_berger(20, 34, 0.1, 10.0)) {
    for (int k = 2; k <= 10; ++k) {
      const auto rep = verify_eigenvectors(WeightIndex(k), p);
      EXPECT_TRUE(rep.pass()) << "k=" << k << " first failure "
                              << (rep.failures.empty() ? std::string() : rep.failures.front());
    }
  }
}

TEST(BergerEigenvectors, SpanTheBlock)
{
  const BergerParams p(0.9, 1.4);
  const auto vecs = berger_eigenvectors(WeightIndex(6), p);
  Eigen::MatrixXcd basis(21, static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t i = 0; i < vecs.size(); ++i) { basis.col(static_cast<Eigen::Index>(i)) = vecs[i].coefficients; }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(basis);
  EXPECT_EQ(lu.rank(), 21);
}

TEST(BergerSpectrum, WeightZeroDoublesFourASquared)
{
  // The numerical block decides which value is doubled at weight zero.
  const BergerParams p(1.7, 0.6);
  const auto num = eigenvalues(assemble_delta1(WeightIndex(0), p.metric()));
  const double a2 = p.a() * p.a();
  EXPECT_LT(oracle::max_rel_diff(num, {4 * a2, 4 * a2, 4 * p.kappa()}), 1e-12);
  EXPECT_GT(oracle::max_rel_diff(num, {4 * a2, 4 * p.kappa(), 4 * p.kappa()}), 1e-3);
}
