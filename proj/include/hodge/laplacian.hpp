#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hodge/metric.hpp"
#include "hodge/su2_rep.hpp"

namespace hodge {

/// Matrix of Δ_p restricted to the weight-k isotypic component.
///
/// Degree 1 uses the ordered basis e_(r,p) = P_r ⊗ X_p^*, r = 0..k,
/// p = 1..3, flattened as 3r + (p - 1). Degree 0 uses P_0..P_k.
struct WeightBlockMatrix
{
  int k = 0;
  int degree = 1;
  Eigen::MatrixXcd entries;

  Eigen::Index size() const { return entries.rows(); }
  static Eigen::Index index(int r, int p) { return 3 * r + (p - 1); }
};

enum class SpectrumTag { exact, coexact, harmonic, untagged };
std::string_view to_string(SpectrumTag t);

struct SpectrumEntry
{
  double eigenvalue = 0.0;
  /// Global multiplicity: (k + 1) × multiplicity inside the block.
  int multiplicity = 0;
  int k = 0;
  int degree = 1;
  SpectrumTag tag = SpectrumTag::untagged;
};

struct Spectrum
{
  std::vector<SpectrumEntry> entries;  // ascending by eigenvalue, then k
  int k_max = 0;
  MetricParams metric{1.0, 1.0, 1.0};
  int degree = 1;

  /// Smallest eigenvalue strictly above `floor` (0 for λ₁).
  double min_above(double floor = 0.0) const;
  /// Entries with equal eigenvalues (across weights) merged for display.
  std::vector<std::pair<double, int>> merged(double merge_tol = 1e-9) const;
};

struct EigenOptions
{
  /// Reconstruct eigenvectors and check ‖Mv − λv‖ ≤ 1e-8‖M‖.
  bool verify = false;
};

struct SpectrumOptions
{
  double merge_tol = 1e-9;
  int workers = 0;  // 0 → default_workers()
};

/// Δ₁ on the weight-k block, assembled from the closed-form entries
/// D, A, B±, C±, E, F (block-pentadiagonal in r).
WeightBlockMatrix assemble_delta1(WeightIndex k, const MetricParams & m);

/// Δ₀ on the weight-k block, equal to −C_{ρ_k}.
WeightBlockMatrix assemble_delta0(WeightIndex k, const MetricParams & m);

/// Frobenius norm; the scale used by every relative tolerance on blocks.
double matrix_norm(const WeightBlockMatrix & M);

/// Real eigenvalues, ascending. The block is conjugated to Hermitian form
/// by the orthonormal scaling, embedded into the real symmetric matrix
/// [[Re, −Im], [Im, Re]] and diagonalised; the doubled eigenvalues are
/// paired off. Throws ConsistencyError if the conjugated block is not
/// Hermitian or a verification residual fails.
std::vector<double> eigenvalues(const WeightBlockMatrix & M, const EigenOptions & opts = {});

/// Eigenvalues with eigenvectors of the original (non-Hermitian) block.
struct EigenDecomposition
{
  std::vector<double> values;
  Eigen::MatrixXcd vectors;  // column i belongs to values[i]
};
EigenDecomposition eigen_decomposition(const WeightBlockMatrix & M);

/// Groups sorted values into clusters; returns (representative, count).
/// Two values merge if |λi − λj| ≤ merge_tol·max(1, |λi|) + floor.
std::vector<std::pair<double, int>> cluster_sorted(const std::vector<double> & sorted, double merge_tol,
                                                   double floor = 0.0);

/// Union over k = 0..k_max (even k only for SO(3)) of block spectra with
/// global multiplicities. Degree-1 entries coinciding with a Δ₀ eigenvalue
/// of the same weight are tagged exact, the rest coexact.
Spectrum full_spectrum(const MetricParams & m, int degree, int k_max, const SpectrumOptions & opts = {});

}  // namespace hodge
