#include "rcthyper/inequality_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rcthyper/rct_transforms.hpp"
#include "rcthyper/special_core.hpp"

namespace rcthyper {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Sample {
  double r;
  double margin;
};

struct Aggregate {
  double worst_r = 0.0;
  double worst = kInf;
  double best_r = 0.0;
  double best = -kInf;
  int n = 0;

  void add(double r, double margin) {
    ++n;
    if (margin < worst || (margin == worst && r < worst_r)) {
      worst = margin;
      worst_r = r;
    }
    if (margin > best || (margin == best && r < best_r)) {
      best = margin;
      best_r = r;
    }
  }
};

// sqrt(3) B(a,b) / (2 pi): the upper (D1) or lower (D3) constant of the
// double inequality for the transformation ratio.
double sharp_constant(const Params& p) {
  return std::numbers::sqrt3 * beta(p) / (2.0 * std::numbers::pi);
}

// F(r^3) and F(y(r)) at one grid point.
struct CubicPair {
  double fx;
  double fy;
};

CubicPair cubic_pair(const Params& p, double r) {
  const CubicMap map(r);
  return {zb_f(p, map.x_arg()), zb_f(p, map.y_arg())};
}

// F(((1-x)/(1+2x))^3) and F(1-x^3).
struct ComplementPair {
  double fu;
  double fv;
};

ComplementPair complement_pair(const Params& p, double x) {
  return {zb_f(p, UnitArg::from_x(cubic_complement(x))),
          zb_f(p, UnitArg::from_complement(x * x * x))};
}

void require_grid(std::span<const double> grid) {
  if (grid.empty()) throw DomainError("verify_theorem: empty grid");
  for (double r : grid) {
    if (!(r > 0.0 && r < 1.0)) {
      throw DomainError("verify_theorem: grid points must lie in (0,1) (got " + std::to_string(r) + ")");
    }
  }
}

using Orientation = int;  // +1: quantity increasing, -1: decreasing

template <typename Fn>
void monotone_margins(std::span<const double> grid, Orientation dir, Fn&& value, Aggregate& agg) {
  double prev = value(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = value(grid[i]);
    agg.add(grid[i - 1], dir * (cur - prev));
    prev = cur;
  }
}

// Margins for the cubic-argument claims at a single r.
void cubic_claim_margins(ClaimId claim, const Params& p, const RegionLabel& label, double r,
                         bool falsify, Aggregate& agg) {
  const CubicPair v = cubic_pair(p, r);
  const double scale = 1.0 + 2.0 * r;
  const double k = sharp_constant(p);
  switch (claim) {
    case ClaimId::T2_1: {
      const double m = scale * v.fx - v.fy;
      if (label.in_d1 || falsify) agg.add(r, m);
      if (label.in_d3 && !falsify) agg.add(r, -m);
      break;
    }
    case ClaimId::T2_2: {
      const double q = scale * v.fx / v.fy;
      if (label.in_d1) {
        agg.add(r, q - 1.0);
        agg.add(r, k - q);
      }
      if (label.in_d3) {
        agg.add(r, q - k);
        agg.add(r, 1.0 - q);
      }
      break;
    }
    case ClaimId::C2_3: {
      if (label.in_d1) {
        agg.add(r, v.fy - v.fx / k);
        agg.add(r, 3.0 * v.fx - v.fy);
      }
      if (label.in_d3) {
        agg.add(r, v.fy - v.fx);
        agg.add(r, 3.0 * v.fx / k - v.fy);
      }
      break;
    }
    case ClaimId::T2_4: {
      const double j = scale * v.fx - v.fy;
      const double limit = j_limit(p);
      if (label.in_d5) {
        agg.add(r, j);
        agg.add(r, limit - j);
      }
      if (label.in_d6) {
        // J decreases from 0 to its (non-positive) limit on D6.
        agg.add(r, -j);
        agg.add(r, j - limit);
      }
      break;
    }
    default:
      break;
  }
}

void complement_claim_margins(ClaimId claim, const Params& p, double x, Aggregate& agg) {
  const ComplementPair v = complement_pair(p, x);
  const double scale = 1.0 + 2.0 * x;
  const double k3 = sharp_constant(p) / 3.0;
  const double limit = j_limit(p);
  switch (claim) {
    case ClaimId::T2_5_1: {
      const double q = v.fu / (scale * v.fv);
      agg.add(x, q - 1.0 / 3.0);
      agg.add(x, k3 - q);
      break;
    }
    case ClaimId::T2_5_2: {
      const double q = v.fu / (scale * v.fv);
      agg.add(x, q - k3);
      agg.add(x, 1.0 / 3.0 - q);
      break;
    }
    case ClaimId::T2_5_3: {
      const double lhs = scale * v.fv;
      const double mid = 3.0 * v.fu;
      agg.add(x, mid - lhs);
      agg.add(x, scale * (v.fv + limit) - mid);
      break;
    }
    case ClaimId::T2_5_4: {
      const double gap = scale * v.fv - 3.0 * v.fu;
      agg.add(x, gap);
      agg.add(x, -scale * limit - gap);
      break;
    }
    default:
      break;
  }
}

bool claim_applies(ClaimId claim, const RegionLabel& l) {
  switch (claim) {
    case ClaimId::T2_1:
    case ClaimId::L3_1f:
      return true;
    case ClaimId::T2_2:
    case ClaimId::C2_3:
      return l.in_d1 || l.in_d3;
    case ClaimId::T2_5_1:
      return l.in_d1;
    case ClaimId::T2_5_2:
      return l.in_d3;
    case ClaimId::T2_5_3:
      return l.in_d5;
    case ClaimId::T2_5_4:
      return l.in_d6;
    case ClaimId::T2_4:
    case ClaimId::L3_1g:
    case ClaimId::L3_2J:
      return l.in_d5 || l.in_d6;
  }
  return false;
}

Aggregate scan_claim(ClaimId claim, const Params& p, const RegionLabel& label,
                     std::span<const double> grid, bool falsify) {
  Aggregate agg;
  switch (claim) {
    case ClaimId::T2_1:
    case ClaimId::T2_2:
    case ClaimId::C2_3:
    case ClaimId::T2_4:
      for (double r : grid) cubic_claim_margins(claim, p, label, r, falsify, agg);
      break;
    case ClaimId::T2_5_1:
    case ClaimId::T2_5_2:
    case ClaimId::T2_5_3:
    case ClaimId::T2_5_4:
      for (double x : grid) complement_claim_margins(claim, p, x, agg);
      break;
    case ClaimId::L3_1f: {
      auto f = [&p](double r) { return quotient_f(p, r); };
      if (label.in_d1) monotone_margins(grid, -1, f, agg);
      if (label.in_d3) monotone_margins(grid, +1, f, agg);
      if (label.in_d2 || label.in_d4) {
        const Orientation first = label.in_d2 ? +1 : -1;
        const auto tp = find_turning_point(p, Quotient::f);
        if (!tp) {
          agg.add(grid[0], -kInf);
          break;
        }
        double prev = f(grid[0]);
        for (std::size_t i = 1; i < grid.size(); ++i) {
          const double cur = f(grid[i]);
          if (grid[i] <= tp->lo) agg.add(grid[i - 1], first * (cur - prev));
          if (grid[i - 1] >= tp->hi) agg.add(grid[i - 1], -first * (cur - prev));
          prev = cur;
        }
      }
      break;
    }
    case ClaimId::L3_1g: {
      auto g = [&p](double r) { return quotient_g(p, r); };
      if (label.in_d5) monotone_margins(grid, -1, g, agg);
      if (label.in_d6) monotone_margins(grid, +1, g, agg);
      break;
    }
    case ClaimId::L3_2J: {
      auto j = [&p](double r) { return j_function(p, r); };
      if (label.in_d5) monotone_margins(grid, +1, j, agg);
      if (label.in_d6) monotone_margins(grid, -1, j, agg);
      break;
    }
  }
  return agg;
}

// Slope of a quotient by central differences, h = 1e-4 shrunk near the
// ends of (0,1). The complement of each shifted point is formed from 1-r.
double quotient_slope(const Params& p, Quotient which, double r) {
  const double w = 1.0 - r;
  const double h = std::min({1e-4, r / 2.0, w / 2.0});
  const UnitArg lo{r - h, w + h};
  const UnitArg hi{r + h, w - h};
  auto q = [&](UnitArg u) { return which == Quotient::f ? quotient_f(p, u) : quotient_g(p, u); };
  return (q(hi) - q(lo)) / (2.0 * h);
}

double analytic_slope(const Params& p, Quotient which, double r) {
  const UnitArg u = UnitArg::from_x(r);
  const HypParams num = which == Quotient::f ? HypParams::zero_balanced(p)
                                             : HypParams(p.a(), p.b(), p.a() + p.b() + 1.0);
  const HypParams den = which == Quotient::f ? HypParams(1.0 / 3.0, 2.0 / 3.0, 1.0)
                                             : HypParams(1.0 / 3.0, 2.0 / 3.0, 2.0);
  const double n = hyp2f1(num, u).value;
  const double d = hyp2f1(den, u).value;
  const double dn = hyp2f1_derivative(num, u).value;
  const double dd = hyp2f1_derivative(den, u).value;
  return (dn * d - n * dd) / (d * d);
}

std::vector<double> turning_scan_grid() {
  std::vector<double> g;
  for (int k = 1; k < 400; ++k) g.push_back(k / 400.0);
  for (int k = 5; k <= 16; ++k) g.push_back(std::pow(10.0, -k / 4.0));
  for (int k = 9; k <= 24; ++k) g.push_back(1.0 - std::pow(10.0, -k / 4.0));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::string_view to_string(ClaimId id) {
  switch (id) {
    case ClaimId::T2_1: return "T2.1";
    case ClaimId::T2_2: return "T2.2";
    case ClaimId::C2_3: return "C2.3";
    case ClaimId::T2_4: return "T2.4";
    case ClaimId::T2_5_1: return "T2.5.1";
    case ClaimId::T2_5_2: return "T2.5.2";
    case ClaimId::T2_5_3: return "T2.5.3";
    case ClaimId::T2_5_4: return "T2.5.4";
    case ClaimId::L3_1f: return "L3.1f";
    case ClaimId::L3_1g: return "L3.1g";
    case ClaimId::L3_2J: return "L3.2J";
  }
  return "unknown";
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims = {
      ClaimId::T2_1,   ClaimId::T2_2,   ClaimId::C2_3,   ClaimId::T2_4,
      ClaimId::T2_5_1, ClaimId::T2_5_2, ClaimId::T2_5_3, ClaimId::T2_5_4,
      ClaimId::L3_1f,  ClaimId::L3_1g,  ClaimId::L3_2J};
  return claims;
}

std::optional<ClaimId> parse_claim(std::string_view text) {
  for (ClaimId id : all_claims()) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::string_view to_string(TurningPoint::Kind k) { return k == TurningPoint::Kind::max ? "max" : "min"; }

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::increasing: return "increasing";
    case Trend::decreasing: return "decreasing";
    case Trend::up_then_down: return "up_then_down";
    case Trend::down_then_up: return "down_then_up";
    case Trend::constant: return "constant";
  }
  return "unknown";
}

std::vector<double> default_r_grid(int n) {
  if (n < 2) throw DomainError("default_r_grid: n must be at least 2");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n) + 3);
  for (int k = 1; k < n; ++k) g.push_back(static_cast<double>(k) / n);
  for (int k = 3; k <= 6; ++k) g.push_back(1.0 - std::pow(10.0, -k));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

double quotient_f(const Params& p, UnitArg r) { return zb_f(p, r) / f_star(r); }
double quotient_f(const Params& p, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("quotient_f: r must lie in (0,1)");
  return quotient_f(p, UnitArg::from_x(r));
}

double quotient_g(const Params& p, UnitArg r) { return zb_g(p, r) / g_star(r); }
double quotient_g(const Params& p, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("quotient_g: r must lie in (0,1)");
  return quotient_g(p, UnitArg::from_x(r));
}

double j_function(const Params& p, double r) {
  const CubicMap map(r);
  const double s = std::cbrt(r);
  return (1.0 + 2.0 * s) * zb_f(p, UnitArg::from_x(r)) - zb_f(p, map.z_arg());
}

double j_limit(const Params& p) { return 2.0 * (r_constant(p) - kLog27) / beta(p); }

ScanReport verify_theorem(ClaimId claim, const Params& p, double tol) {
  const std::vector<double> grid = default_r_grid();
  return verify_theorem(claim, p, grid, tol);
}

ScanReport verify_theorem(ClaimId claim, const Params& p, std::span<const double> grid, double tol) {
  require_grid(grid);
  ScanReport rep;
  rep.params = p;
  rep.region = classify(p);
  rep.claim = claim;
  rep.applicable = claim_applies(claim, rep.region);
  if (!rep.applicable) {
    rep.worst_r = rep.best_r = std::numeric_limits<double>::quiet_NaN();
    rep.worst_margin = rep.best_margin = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }

  // T2.1 outside D1 and D3: neither inequality holds, so the scan must find
  // margins of both signs.
  const bool falsify = claim == ClaimId::T2_1 && !rep.region.in_d1 && !rep.region.in_d3;
  rep.expects_violation = falsify;

  Aggregate agg = scan_claim(claim, p, rep.region, grid, falsify);
  if (falsify && !(agg.worst < -tol && agg.best > tol)) {
    std::vector<double> dense = default_r_grid(2000);
    dense.insert(dense.end(), grid.begin(), grid.end());
    std::sort(dense.begin(), dense.end());
    dense.erase(std::unique(dense.begin(), dense.end()), dense.end());
    agg = scan_claim(claim, p, rep.region, dense, falsify);
  }

  rep.worst_r = agg.worst_r;
  rep.worst_margin = agg.worst;
  rep.best_r = agg.best_r;
  rep.best_margin = agg.best;
  rep.n_samples = agg.n;
  rep.holds = agg.worst >= -tol;
  rep.boundary = std::fabs(agg.worst) < tol;
  rep.region_consistent = falsify ? (agg.worst < -tol && agg.best > tol) : rep.holds;
  return rep;
}

std::optional<TurningPoint> find_turning_point(const Params& p, Quotient which) {
  static const std::vector<double> grid = turning_scan_grid();
  int prev_sign = 0;
  double prev_r = 0.0;
  for (double r : grid) {
    const int s = sign_of(quotient_slope(p, which, r));
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      double lo = prev_r;
      double hi = r;
      const int lo_sign = prev_sign;
      for (int it = 0; it < 200 && hi - lo > 1e-6; ++it) {
        const double mid = 0.5 * (lo + hi);
        const int ms = sign_of(quotient_slope(p, which, mid));
        if (ms == lo_sign) {
          lo = mid;
        } else if (ms == 0) {
          lo = hi = mid;
        } else {
          hi = mid;
        }
      }
      TurningPoint tp;
      tp.lo = lo;
      tp.hi = hi;
      tp.r0 = 0.5 * (lo + hi);
      tp.kind = lo_sign > 0 ? TurningPoint::Kind::max : TurningPoint::Kind::min;
      tp.derivative_residual = std::fabs(analytic_slope(p, which, tp.r0));
      return tp;
    }
    prev_sign = s;
    prev_r = r;
  }
  return std::nullopt;
}

Trend sequence_trend(std::span<const double> seq) {
  if (seq.size() < 3) throw DomainError("sequence_trend: need n_max >= 2");
  int first = 0;
  int current = 0;
  int reversals = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const int s = sign_of(seq[i] - seq[i - 1]);
    if (s == 0) continue;
    if (first == 0) {
      first = current = s;
    } else if (s != current) {
      ++reversals;
      current = s;
    }
  }
  if (reversals > 1) {
    throw MixedPatternError("sequence_trend: " + std::to_string(reversals) +
                            " trend reversals; expected at most one");
  }
  if (first == 0) return Trend::constant;
  if (reversals == 0) return first > 0 ? Trend::increasing : Trend::decreasing;
  return first > 0 ? Trend::up_then_down : Trend::down_then_up;
}

Trend sequence_trend(const std::function<double(long)>& seq, long n_max) {
  if (n_max < 2) throw DomainError("sequence_trend: need n_max >= 2");
  std::vector<double> values(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) values[static_cast<std::size_t>(n)] = seq(n);
  return sequence_trend(values);
}

std::vector<double> coefficient_ratio_f(const Params& p, long n_max) {
  std::vector<double> num = SeriesCoefficients::a_n(p, n_max);
  const std::vector<double> den = SeriesCoefficients::a_star_n(n_max);
  for (std::size_t i = 0; i < num.size(); ++i) num[i] /= den[i];
  return num;
}

std::vector<double> coefficient_ratio_g(const Params& p, long n_max) {
  std::vector<double> num = SeriesCoefficients::b_n(p, n_max);
  const std::vector<double> den = SeriesCoefficients::b_star_n(n_max);
  for (std::size_t i = 0; i < num.size(); ++i) num[i] /= den[i];
  return num;
}

Trend empirical_trend(const Params& p, Quotient which, std::span<const double> grid) {
  std::vector<double> values;
  values.reserve(grid.size());
  for (double r : grid) values.push_back(which == Quotient::f ? quotient_f(p, r) : quotient_g(p, r));
  return sequence_trend(values);
}

}  // namespace rcthyper
