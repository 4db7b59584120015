#pragma once

#include <Eigen/Dense>

#include "hodge/metric.hpp"

namespace hodge {

/// Weight of the irreducible SU(2) representation V_k, dim V_k = k + 1.
/// Only even weights descend to SO(3).
class WeightIndex
{
public:
  explicit WeightIndex(int k);

  int value() const { return k_; }
  int dim() const { return k_ + 1; }
  bool descends_to_so3() const { return k_ % 2 == 0; }

  friend bool operator==(WeightIndex, WeightIndex) = default;

private:
  int k_;
};

/// True if weight k contributes to spectra of the given group.
bool weight_contributes(Group g, int k);

/// Matrices of dρ_k on the basis P_l = z^l w^(k-l), l = 0..k, acting on
/// columns: dρ_k(E) P_l = Σ_r (dE)_{r,l} P_r.
struct GeneratorMatrices
{
  int k = 0;
  Eigen::MatrixXcd dE1;
  Eigen::MatrixXcd dE2;
  Eigen::MatrixXcd dE3;
  /// a·dE1, b·dE2, c·dE3.
  Eigen::MatrixXcd dX1;
  Eigen::MatrixXcd dX2;
  Eigen::MatrixXcd dX3;
  /// C_{ρ_k} = dX1² + dX2² + dX3², built from the closed-form entries.
  Eigen::MatrixXd casimir;

  /// Non-zero diagonals of the generators (1) and of the Casimir (2).
  static constexpr int generator_bandwidth = 1;
  static constexpr int casimir_bandwidth = 2;
};

GeneratorMatrices generators(WeightIndex k, const MetricParams & m);

/// Closed-form Casimir entries, including the corrected sign of the r ± 2
/// off-diagonals:
///   C_{r,r}   = -(a²(k-2r)² + (b²+c²)(k(2r+1) - 2r²))
///   C_{r,r+2} = (b²-c²)(r+2)(r+1)
///   C_{r,r-2} = (b²-c²)(k-r+1)(k-r+2)
Eigen::MatrixXd casimir_matrix(WeightIndex k, const MetricParams & m);

/// Diagonal S with S_rr = sqrt(r!(k-r)!/k!), computed through lgamma.
/// S·dE·S⁻¹ is skew-Hermitian for every generator, so S·C·S⁻¹ and the
/// Hodge-Laplacian blocks conjugated by S ⊗ Id become Hermitian.
Eigen::VectorXd orthonormal_scaling(WeightIndex k);

/// S·M·S⁻¹ for diagonal S given as a vector, with M of size n·block.
/// Each entry of S is repeated `block` times along the diagonal.
Eigen::MatrixXcd conjugate_by_scaling(const Eigen::MatrixXcd & M, const Eigen::VectorXd & S, int block = 1);

}  // namespace hodge
