#pragma once

#include <span>

#include "rcthyper/hypergeometric.hpp"

namespace rcthyper {

/// Arguments of the cubic transformation at a point r in (0,1).
///
/// y(r) = 9r(1+r+r^2)/(1+2r)^3 and 1-y(r) = ((1-r)/(1+2r))^3; z(r) is
/// y evaluated at the cube root of r. Complements are formed directly
/// from 1-r so they keep full relative precision as r -> 1.
struct CubicMap {
  double r;
  double x_of_r;        ///< r^3
  double y_of_r;
  double one_minus_y;
  double z_of_r;        ///< y(r^(1/3))
  double one_minus_z;

  explicit CubicMap(double r);

  UnitArg x_arg() const { return UnitArg{x_of_r, 1.0 - x_of_r}; }
  UnitArg y_arg() const { return UnitArg{y_of_r, one_minus_y}; }
  UnitArg z_arg() const { return UnitArg{z_of_r, one_minus_z}; }
};

/// ((1-r)/(1+2r))^3, the complement of the cubic map.
double cubic_complement(double r);

/// y(r) = 9r(1+r+r^2)/(1+2r)^3 for r in (0,1).
double cubic_forward(double r);

/// y(r^(1/3)).
double z_of_r(double r);

/// Max relative residual of F*(1-((1-r)/(1+2r))^3) = (1+2r) F*(r^3).
double verify_rct1(std::span<const double> r_grid);

/// Max relative residual of F*(((1-r)/(1+2r))^3) = (1+2r)/3 F*(1-r^3).
double verify_rct2(std::span<const double> r_grid);

/// Landen identities for F(1/2,1/2;1;.):
///   which = 1: F(4r/(1+r)^2) = (1+r) F(r^2)
///   which = 2: F(((1-r)/(1+r))^2) = (1+r)/2 F(1-r^2)
double verify_landen(std::span<const double> r_grid, int which);

/// Max relative residual of the cubic transformation differentiated in r,
/// with s = r^(1/3) and z = y(s):
///   (2/3) G*(z)/(1+2s) = (2/3)(1-s) F*(r) + (2/9) s^2 (1+2s)(1-s)/(1-r) G*(r).
double verify_differentiated_rct(std::span<const double> r_grid);

/// Single-point residuals behind the grid verifiers.
double rct1_residual(double r);
double rct2_residual(double r);
double landen_residual(double r, int which);
double differentiated_rct_residual(double r);

}  // namespace rcthyper
