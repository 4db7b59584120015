#include "hodge/geometry.hpp"

#include <numbers>

namespace hodge {

Christoffel christoffel(const MetricParams & m)
{
  const double a = m.a(), b = m.b(), c = m.c();
  const double ab_c = a * b / c;
  const double ac_b = a * c / b;
  const double bc_a = b * c / a;

  Christoffel g;
  auto & t = g.table;
  // Koszul formula; [X1,X2] = (2ab/c)X3 and cyclic.
  t[0][1][2] = ab_c + ac_b - bc_a;   // ∇_{X1}X2 ∝ X3
  t[1][0][2] = -ab_c + ac_b - bc_a;  // ∇_{X2}X1 ∝ X3
  t[0][2][1] = -ab_c - ac_b + bc_a;  // ∇_{X1}X3 ∝ X2
  t[2][0][1] = -ab_c + ac_b + bc_a;  // ∇_{X3}X1 ∝ X2
  t[1][2][0] = ab_c - ac_b + bc_a;   // ∇_{X2}X3 ∝ X1
  t[2][1][0] = ab_c - ac_b - bc_a;   // ∇_{X3}X2 ∝ X1

  g.gamma1 = t[0][2][1];
  g.gamma2 = t[1][2][0];
  g.gamma3 = t[2][1][0];
  return g;
}

Curvature curvature(const MetricParams & m)
{
  const auto [x, y, z] = m.squares();
  const double xy_z = x * y / z;
  const double xz_y = x * z / y;
  const double yz_x = y * z / x;

  Curvature k;
  k.r12 = 3.0 * xy_z - xz_y - yz_x - 2.0 * x - 2.0 * y + 2.0 * z;
  k.r13 = -xy_z + 3.0 * xz_y - yz_x - 2.0 * x + 2.0 * y - 2.0 * z;
  k.r23 = -xy_z - xz_y + 3.0 * yz_x + 2.0 * x - 2.0 * y - 2.0 * z;

  k.ricci = {-k.r12 - k.r13, -k.r12 - k.r23, -k.r13 - k.r23};
  k.scal = k.ricci[0] + k.ricci[1] + k.ricci[2];
  k.norm_ric2 = k.ricci[0] * k.ricci[0] + k.ricci[1] * k.ricci[1] + k.ricci[2] * k.ricci[2];
  // R_{ijij} enters the full contraction four times per unordered pair.
  k.norm_r2 = 4.0 * (k.r12 * k.r12 + k.r13 * k.r13 + k.r23 * k.r23);
  return k;
}

std::array<double, 3> connection_casimir(const MetricParams & m)
{
  const auto [x, y, z] = m.squares();
  const double s = y * z / x + x * z / y + x * y / z;
  return {-2.0 * (s - 2.0 * x), -2.0 * (s - 2.0 * y), -2.0 * (s - 2.0 * z)};
}

std::array<double, 3> weitzenbock_diagonal(const MetricParams & m)
{
  const auto [x, y, z] = m.squares();
  return {4.0 * y * z / x, 4.0 * x * z / y, 4.0 * x * y / z};
}

double base_volume(Group g)
{
  constexpr double round_s3 = 2.0 * std::numbers::pi * std::numbers::pi;
  return g == Group::SU2 ? round_s3 : 0.5 * round_s3;
}

double volume(const MetricParams & m)
{
  return base_volume(m.group()) / (m.a() * m.b() * m.c());
}

GeometryTensors geometry(const MetricParams & m)
{
  return {christoffel(m), curvature(m), connection_casimir(m), volume(m)};
}

}  // namespace hodge
