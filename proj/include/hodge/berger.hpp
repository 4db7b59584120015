#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hodge/metric.hpp"
#include "hodge/su2_rep.hpp"

namespace hodge {

/// Berger metric g_(a,b,b).
class BergerParams
{
public:
  BergerParams(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  /// Curvature parameter κ = b⁴/a² (a quarter of the squared Hopf curvature norm).
  double kappa() const { return b_ * b_ * b_ * b_ / (a_ * a_); }

  MetricParams metric(Group g = Group::SU2) const { return {a_, b_, b_, g}; }

  /// Accepts (a, b, c) with |b − c| ≤ tol·max(b, c).
  static BergerParams from_metric(const MetricParams & m, double tol = 1e-12);

private:
  double a_;
  double b_;
};

enum class BergerFamily { nu, mu_edge, mu_pm };
std::string_view to_string(BergerFamily f);

struct BergerEigenvalue
{
  BergerFamily family = BergerFamily::nu;
  int k = 0;
  int j = 0;
  int sign = 0;  // ±1 for mu_pm, 0 otherwise
  double value = 0.0;
  int multiplicity_in_block = 1;

  std::string label() const;
};

/// ν_{k,j} = a²(k−2j)² + b²((4j+2)k − 4j²), the function eigenvalues.
double berger_nu(int k, int j, const BergerParams & p);
/// μ_{k,j} for j ∈ {−1, 0, k, k+1}.
double berger_mu_edge(int k, int j, const BergerParams & p);
/// μ±_{k,j} = ν + 2b⁴/a² ± 2(b²/a²)√(a²ν + b⁴), 1 ≤ j ≤ k−1.
double berger_mu_pm(int k, int j, int sign, const BergerParams & p);
/// (√(ν+κ) ± √κ)², the same values in terms of κ.
double berger_mu_pm_compact(int k, int j, int sign, const BergerParams & p);

/// Closed-form spectrum of Δ₁ on the weight-k block, 3(k+1) values counted
/// with multiplicity inside the block.
std::vector<BergerEigenvalue> berger_block_spectrum(WeightIndex k, const BergerParams & p);

/// Sorted values of berger_block_spectrum, each repeated by its block multiplicity.
std::vector<double> berger_block_values(WeightIndex k, const BergerParams & p);

enum class BergerVectorKind { v, w_edge, w_pm };

struct BergerEigenvector
{
  BergerVectorKind kind = BergerVectorKind::v;
  int k = 0;
  int j = 0;
  int sign = 0;
  double eigenvalue = 0.0;
  /// Coefficients in the block index space (r, p) ↦ 3r + p − 1.
  Eigen::VectorXcd coefficients;

  std::string label() const;
};

/// The α, β, γ coefficients of w±_{k,j}.
struct MixedCoefficients
{
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};
MixedCoefficients berger_mixed_coefficients(int k, int j, int sign, const BergerParams & p);

/// All 3(k+1) closed-form eigenvectors v_{k,j}, w_{k,j}, w±_{k,j}; k ≥ 2.
std::vector<BergerEigenvector> berger_eigenvectors(WeightIndex k, const BergerParams & p);

struct EigenvectorResidual
{
  std::string label;
  double eigenvalue = 0.0;
  /// ‖Mw − λw‖ / (‖M‖·‖w‖).
  double relative_residual = 0.0;
  bool pass = false;
};

struct EigenvectorReport
{
  int k = 0;
  double tolerance = 1e-8;
  double max_relative_residual = 0.0;
  std::vector<EigenvectorResidual> residuals;
  /// Labels of candidates exceeding the tolerance.
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Applies the assembled Δ₁⁽ᵏ⁾ at (a,b,b) to every closed-form eigenvector.
EigenvectorReport verify_eigenvectors(WeightIndex k, const BergerParams & p, double tolerance = 1e-8);

/// min(a² + 2b², 4b⁴/a², 4a²) for SU(2); min(4b⁴/a², 4a²) for SO(3).
double berger_first_eigenvalue(const BergerParams & p, Group g);

}  // namespace hodge
