#include "rcthyper/rct_transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rcthyper {
namespace {

void require_open_unit(double r, const char* who) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError(std::string(who) + ": r must lie in (0,1) (got " + std::to_string(r) + ")");
  }
}

double rel_residual(double lhs, double rhs) { return std::fabs(lhs - rhs) / std::fabs(rhs); }

template <typename Fn>
double max_over(std::span<const double> grid, Fn&& residual) {
  double worst = 0.0;
  for (double r : grid) worst = std::max(worst, residual(r));
  return worst;
}

}  // namespace

double cubic_complement(double r) {
  const double q = (1.0 - r) / (1.0 + 2.0 * r);
  return q * q * q;
}

double cubic_forward(double r) {
  require_open_unit(r, "cubic_forward");
  if (r > 0.9) return 1.0 - cubic_complement(r);
  const double d = 1.0 + 2.0 * r;
  return 9.0 * r * (1.0 + r + r * r) / (d * d * d);
}

double z_of_r(double r) {
  require_open_unit(r, "z_of_r");
  return cubic_forward(std::cbrt(r));
}

CubicMap::CubicMap(double r_in) : r(r_in) {
  require_open_unit(r, "CubicMap");
  x_of_r = r * r * r;
  y_of_r = cubic_forward(r);
  one_minus_y = cubic_complement(r);
  const double s = std::cbrt(r);
  z_of_r = cubic_forward(s);
  // 1 - s = (1 - r)/(1 + s + s^2) avoids cancelling the rounded cube root.
  const double one_minus_s = (1.0 - r) / (1.0 + s + s * s);
  const double q = one_minus_s / (1.0 + 2.0 * s);
  one_minus_z = q * q * q;
}

double rct1_residual(double r) {
  const CubicMap map(r);
  const double lhs = f_star(map.y_arg());
  const double rhs = (1.0 + 2.0 * r) * f_star(map.x_arg());
  return rel_residual(lhs, rhs);
}

double rct2_residual(double r) {
  require_open_unit(r, "verify_rct2");
  const double lhs = f_star(UnitArg::from_x(cubic_complement(r)));
  const double rhs = (1.0 + 2.0 * r) / 3.0 * f_star(UnitArg::from_complement(r * r * r));
  return rel_residual(lhs, rhs);
}

double landen_residual(double r, int which) {
  require_open_unit(r, "verify_landen");
  const HypParams half(0.5, 0.5, 1.0);
  const double q = (1.0 - r) / (1.0 + r);
  if (which == 1) {
    // 4r/(1+r)^2 = 1 - ((1-r)/(1+r))^2
    const double lhs = hyp2f1(half, UnitArg{4.0 * r / ((1.0 + r) * (1.0 + r)), q * q}).value;
    const double rhs = (1.0 + r) * hyp2f1(half, UnitArg::from_x(r * r)).value;
    return rel_residual(lhs, rhs);
  }
  if (which == 2) {
    const double lhs = hyp2f1(half, UnitArg::from_x(q * q)).value;
    const double rhs = 0.5 * (1.0 + r) * hyp2f1(half, UnitArg::from_complement(r * r)).value;
    return rel_residual(lhs, rhs);
  }
  throw DomainError("verify_landen: which must be 1 or 2 (got " + std::to_string(which) + ")");
}

double differentiated_rct_residual(double r) {
  const CubicMap map(r);
  const double s = std::cbrt(r);
  const double one_minus_s = (1.0 - r) / (1.0 + s + s * s);
  const double lhs = 2.0 / 3.0 * g_star(map.z_arg()) / (1.0 + 2.0 * s);
  const UnitArg at_r = UnitArg::from_x(r);
  // (1-s)/(1-r) = 1/(1+s+s^2)
  const double rhs = 2.0 / 3.0 * one_minus_s * f_star(at_r) +
                     2.0 / 9.0 * s * s * (1.0 + 2.0 * s) / (1.0 + s + s * s) * g_star(at_r);
  return rel_residual(rhs, lhs);
}

double verify_rct1(std::span<const double> r_grid) { return max_over(r_grid, rct1_residual); }

double verify_rct2(std::span<const double> r_grid) { return max_over(r_grid, rct2_residual); }

double verify_landen(std::span<const double> r_grid, int which) {
  if (which != 1 && which != 2) {
    throw DomainError("verify_landen: which must be 1 or 2 (got " + std::to_string(which) + ")");
  }
  return max_over(r_grid, [which](double r) { return landen_residual(r, which); });
}

double verify_differentiated_rct(std::span<const double> r_grid) {
  return max_over(r_grid, differentiated_rct_residual);
}

}  // namespace rcthyper
