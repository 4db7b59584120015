#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "hodge/geometry.hpp"
#include "hodge/laplacian.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hodge;
using cd = std::complex<double>;

TEST(Assembly, MatchesWeitzenbockRoute)
{
  for (const auto & m : testutil::random_metrics(20, 21, 0.2, 5.0)) {
    for (int k = 0; k <= 8; ++k) {
      const auto M = assemble_delta1(WeightIndex(k), m);
      const auto want = oracle::delta1_weitzenbock(k, m);
      EXPECT_LT((M.entries - want).norm(), 1e-11 * want.norm()) << "k=" << k;
    }
  }
}

TEST(Assembly, Delta0MatchesGenerators)
{
  for (const auto & m : testutil::random_metrics(10, 22, 0.2, 5.0)) {
    for (int k = 0; k <= 8; ++k) {
      const auto M = assemble_delta0(WeightIndex(k), m);
      const auto want = oracle::delta0_from_generators(k, m);
      EXPECT_LT((M.entries - want).norm(), 1e-11 * (1.0 + want.norm()));
    }
  }
}

TEST(Assembly, WeightOneDisplayedMatrix)
{
  // The displayed k = 1 matrix lives in the basis P_r ⊗ (s_p X_p^*); conjugating
  // by diag(a, b, c) on the form index recovers it.
  for (const auto & m : testutil::random_metrics(20, 23, 0.2, 5.0)) {
    const auto M = assemble_delta1(WeightIndex(1), m);
    const auto s = m.scales();
    Eigen::MatrixXcd conj = M.entries;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) { conj(i, j) *= s[j % 3] / s[i % 3]; }
    }
    const auto want = oracle::k1_displayed(m);
    EXPECT_LT((conj - want).norm(), 1e-11 * want.norm());
  }
}

TEST(Assembly, DiagonalEntries)
{
  const MetricParams m(1.2, 0.6, 2.5);
  const auto M = assemble_delta1(WeightIndex(4), m);
  const auto C = casimir_matrix(WeightIndex(4), m);
  const auto w = weitzenbock_diagonal(m);
  for (int r = 0; r <= 4; ++r) {
    for (int p = 1; p <= 3; ++p) {
      const auto i = WeightBlockMatrix::index(r, p);
      EXPECT_NEAR(M.entries(i, i).real(), -C(r, r) + w[p - 1], 1e-12 * std::abs(C(r, r)));
      EXPECT_EQ(M.entries(i, i).imag(), 0.0);
    }
  }
}

TEST(Assembly, BlockPentadiagonal)
{
  const auto M = assemble_delta1(WeightIndex(9), MetricParams(0.9, 1.4, 2.0));
  for (int r = 0; r <= 9; ++r) {
    for (int s = 0; s <= 9; ++s) {
      if (std::abs(r - s) <= 2) { continue; }
      for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
          EXPECT_EQ(M.entries(WeightBlockMatrix::index(r, p), WeightBlockMatrix::index(s, q)), cd(0.0));
        }
      }
    }
  }
}

TEST(Assembly, Hermitizable)
{
  for (const auto & m : testutil::random_metrics(5, 24, 0.1, 10.0)) {
    for (int k : {0, 1, 7, 30, 60}) {
      const auto M = assemble_delta1(WeightIndex(k), m);
      const auto H = conjugate_by_scaling(M.entries, orthonormal_scaling(WeightIndex(k)), 3);
      EXPECT_LT((H - H.adjoint()).norm(), 1e-12 * H.norm()) << "k=" << k;
    }
  }
}

TEST(Eigenvalues, WeightZeroIsDiagonal)
{
  for (const auto & m : testutil::random_metrics(100, 25, 0.1, 10.0)) {
    const auto ev = eigenvalues(assemble_delta1(WeightIndex(0), m));
    const auto [A, B, C] = m.squares();
    EXPECT_LT(oracle::max_rel_diff(ev, {4 * B * C / A, 4 * A * C / B, 4 * A * B / C}), 1e-12);
  }
}

TEST(Eigenvalues, WeightOneClosedForms)
{
  for (const auto & m : testutil::random_metrics(100, 26, 0.1, 10.0)) {
    const auto ev = eigenvalues(assemble_delta1(WeightIndex(1), m));
    const auto [A, B, C] = m.squares();
    const auto co = oracle::k1_coclosed(m);
    const double ex = A + B + C;
    EXPECT_LT(oracle::max_rel_diff(ev, {ex, ex, co[0], co[0], co[1], co[1]}), 1e-10);
  }
}

TEST(Eigenvalues, AgreeWithGeneralSolver)
{
  for (const auto & m : testutil::random_metrics(5, 27, 0.3, 3.0)) {
    for (int k : {2, 5, 9}) {
      const auto M = assemble_delta1(WeightIndex(k), m);
      EXPECT_LT(oracle::max_rel_diff(eigenvalues(M), oracle::general_eigenvalues(M.entries)), 1e-8);
    }
  }
}

TEST(Eigenvalues, NonNegativeAndVerified)
{
  EigenOptions opts;
  opts.verify = true;
  for (const auto & m : testutil::random_metrics(10, 28, 0.1, 10.0)) {
    for (int k = 0; k <= 12; ++k) {
      const auto M = assemble_delta1(WeightIndex(k), m);
      const auto ev = eigenvalues(M, opts);
      EXPECT_EQ(ev.size(), static_cast<std::size_t>(3 * (k + 1)));
      EXPECT_GE(ev.front(), -1e-10 * matrix_norm(M));
    }
  }
}

TEST(Eigenvalues, RoundMetricWeightOne)
{
  const auto ev = eigenvalues(assemble_delta1(WeightIndex(1), MetricParams(1.0, 1.0, 1.0)));
  EXPECT_LT(oracle::max_rel_diff(ev, {3, 3, 9, 9, 9, 9}), 1e-12);
}

TEST(Eigenvalues, Delta0RoundAndWeightOne)
{
  const auto ev = eigenvalues(assemble_delta0(WeightIndex(1), MetricParams(1.0, 1.0, 1.0)));
  EXPECT_LT(oracle::max_rel_diff(ev, {3, 3}), 1e-12);
  const MetricParams m(0.8, 1.3, 2.2);
  const auto [A, B, C] = m.squares();
  EXPECT_LT(oracle::max_rel_diff(eigenvalues(assemble_delta0(WeightIndex(1), m)), {A + B + C, A + B + C}), 1e-12);
}

TEST(Eigenvalues, Decomposition)
{
  const auto M = assemble_delta1(WeightIndex(5), MetricParams(0.7, 1.6, 1.1));
  const auto d = eigen_decomposition(M);
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    const Eigen::VectorXcd v = d.vectors.col(static_cast<Eigen::Index>(i));
    EXPECT_LT((M.entries * v - d.values[i] * v).norm(), 1e-8 * M.entries.norm() * v.norm());
  }
}

TEST(Containment, Delta0InsideDelta1)
{
  for (const auto & m : testutil::random_metrics(20, 29, 0.1, 10.0)) {
    for (int k = 1; k <= 10; ++k) {
      const auto e1 = eigenvalues(assemble_delta1(WeightIndex(k), m));
      for (double v : eigenvalues(assemble_delta0(WeightIndex(k), m))) {
        const bool found = std::any_of(e1.begin(), e1.end(), [&](double x) { return oracle::close(x, v, 1e-8); });
        EXPECT_TRUE(found) << "k=" << k << " v=" << v;
      }
    }
  }
}

TEST(Clustering, MergesWithinTolerance)
{
  const auto c = cluster_sorted({1.0, 1.0 + 1e-12, 2.0, 3.0, 3.0}, 1e-9);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].second, 2);
  EXPECT_EQ(c[1].second, 1);
  EXPECT_EQ(c[2].second, 2);
}

TEST(FullSpectrum, RoundMetric)
{
  const auto s = full_spectrum(MetricParams(1.0, 1.0, 1.0), 1, 2);
  EXPECT_NEAR(s.min_above(0.0), 3.0, 1e-12);
  // Weight 0: 4 (×3); weight 1: 3 (×2·2) exact, 9 (×4·2) coexact.
  int mult4 = 0;
  for (const auto & e : s.entries) {
    if (e.k == 0) {
      EXPECT_NEAR(e.eigenvalue, 4.0, 1e-12);
      EXPECT_EQ(e.tag, SpectrumTag::coexact);
      mult4 += e.multiplicity;
    }
    if (e.k == 1 && std::abs(e.eigenvalue - 3.0) < 1e-9) {
      EXPECT_EQ(e.tag, SpectrumTag::exact);
      EXPECT_EQ(e.multiplicity, 4);
    }
  }
  EXPECT_EQ(mult4, 3);
}

TEST(FullSpectrum, TotalMultiplicity)
{
  const MetricParams m(0.9, 1.3, 1.7);
  const int k_max = 6;
  int total = 0;
  for (const auto & e : full_spectrum(m, 1, k_max).entries) { total += e.multiplicity; }
  int want = 0;
  for (int k = 0; k <= k_max; ++k) { want += 3 * (k + 1) * (k + 1); }
  EXPECT_EQ(total, want);
}

TEST(FullSpectrum, So3KeepsEvenWeights)
{
  const MetricParams m(1.0, 1.0, 1.0, Group::SO3);
  const auto s = full_spectrum(m, 1, 6);
  for (const auto & e : s.entries) { EXPECT_EQ(e.k % 2, 0); }
  EXPECT_NEAR(s.min_above(0.0), 4.0, 1e-12);
  const auto su2 = full_spectrum(m.with_group(Group::SU2), 1, 6);
  EXPECT_NEAR(su2.min_above(0.0), 3.0, 1e-12);
}

TEST(FullSpectrum, Degree0HarmonicConstants)
{
  const auto s = full_spectrum(MetricParams(1.0, 2.0, 3.0), 0, 4);
  ASSERT_FALSE(s.entries.empty());
  EXPECT_EQ(s.entries.front().tag, SpectrumTag::harmonic);
  EXPECT_EQ(s.entries.front().k, 0);
}

TEST(FullSpectrum, WorkerCountDoesNotMatter)
{
  const MetricParams m(0.5, 1.5, 2.5);
  SpectrumOptions one;
  one.workers = 1;
  SpectrumOptions many;
  many.workers = 4;
  const auto x = full_spectrum(m, 1, 12, one);
  const auto y = full_spectrum(m, 1, 12, many);
  ASSERT_EQ(x.entries.size(), y.entries.size());
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    EXPECT_EQ(x.entries[i].eigenvalue, y.entries[i].eigenvalue);
    EXPECT_EQ(x.entries[i].multiplicity, y.entries[i].multiplicity);
    EXPECT_EQ(x.entries[i].k, y.entries[i].k);
  }
}
