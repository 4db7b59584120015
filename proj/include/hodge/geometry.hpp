#pragma once

#include <array>

#include "hodge/metric.hpp"

namespace hodge {

/// Christoffel symbols of the Levi-Civita connection of g_(a,b,c) in the
/// orthonormal frame X_i.
///
/// `table[i][j][k]` is X_k^*(∇_{X_i} X_j) with zero-based indices. Only six
/// entries are non-zero; the three named constants are the ones that enter
/// the Hodge-Laplacian matrix:
///   gamma1 = Γ_{1,3}^2 = -ab/c - ac/b + bc/a
///   gamma2 = Γ_{2,3}^1 =  ab/c - ac/b + bc/a
///   gamma3 = Γ_{3,2}^1 =  ab/c - ac/b - bc/a
struct Christoffel
{
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;
  std::array<std::array<std::array<double, 3>, 3>, 3> table{};
};

/// Curvature data. The curvature operator on Λ²(su(2)) is diagonal in
/// {X1∧X2, X1∧X3, X2∧X3} with eigenvalues r12, r13, r23. The sign convention
/// makes these -1 on the unit round sphere.
struct Curvature
{
  double r12 = 0.0;
  double r13 = 0.0;
  double r23 = 0.0;
  /// Eigenvalues of 2q(R) = Ric on X1*, X2*, X3*.
  std::array<double, 3> ricci{};
  double scal = 0.0;
  double norm_ric2 = 0.0;
  /// Squared norm of the full (0,4) curvature tensor, 4(r12² + r13² + r23²).
  double norm_r2 = 0.0;
};

struct GeometryTensors
{
  Christoffel christoffel;
  Curvature curvature;
  /// Eigenvalues of C_∇ = Σ ∇²_{X_k} on X1*, X2*, X3*.
  std::array<double, 3> cnabla{};
  double volume = 0.0;
};

Christoffel christoffel(const MetricParams & m);
Curvature curvature(const MetricParams & m);
std::array<double, 3> connection_casimir(const MetricParams & m);

/// 4·diag(b²c²/a², a²c²/b², a²b²/c²): the constant fibre-wise term of the
/// Weitzenböck formula on 1-forms.
std::array<double, 3> weitzenbock_diagonal(const MetricParams & m);

/// Unperturbed volume for the normalisation ⟨X,Y⟩₀ = -½ tr(XY): the unit
/// round 3-sphere for SU(2) (2π²) and half that for SO(3).
double base_volume(Group g);

/// vol(G, g_(a,b,c)) = base_volume / (abc).
double volume(const MetricParams & m);

GeometryTensors geometry(const MetricParams & m);

}  // namespace hodge
