#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rcthyper/hypergeometric.hpp"
#include "rcthyper/regions.hpp"

namespace rcthyper {

/// Claims that can be checked on a grid.
enum class ClaimId { T2_1, T2_2, C2_3, T2_4, T2_5_1, T2_5_2, T2_5_3, T2_5_4, L3_1f, L3_1g, L3_2J };

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view text);
const std::vector<ClaimId>& all_claims();

/// Default margin tolerance; margins in (-tol, tol) are inconclusive.
inline constexpr double kMarginTol = 1e-9;

/// Outcome of checking one claim at one (a,b) over a grid.
struct ScanReport {
  Params params{1.0, 1.0};
  RegionLabel region;
  ClaimId claim = ClaimId::T2_1;
  /// False when (a,b) lies in no region the claim speaks about.
  bool applicable = false;
  /// The tested inequality holds on the grid: worst_margin >= -tol.
  bool holds = false;
  /// Claim is the "neither inequality holds" statement for D2/D4.
  bool expects_violation = false;
  /// Result agrees with what the claim asserts for this region.
  bool region_consistent = false;
  /// |worst_margin| < tol.
  bool boundary = false;
  double worst_r = 0.0;
  double worst_margin = 0.0;
  double best_r = 0.0;
  double best_margin = 0.0;
  int n_samples = 0;
};

/// Located interior extremum of a quotient.
struct TurningPoint {
  enum class Kind { max, min };
  double r0 = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  Kind kind = Kind::max;
  /// |d/dr quotient| at r0 from the analytic derivative.
  double derivative_residual = 0.0;
};

std::string_view to_string(TurningPoint::Kind k);

enum class Trend { increasing, decreasing, up_then_down, down_then_up, constant };

std::string_view to_string(Trend t);

enum class Quotient { f, g };

/// {k/n : k=1..n-1} plus {1-10^-k : k=3..6}, ascending.
std::vector<double> default_r_grid(int n = 200);

/// f(r) = F(a,b;a+b;r)/F(1/3,2/3;1;r).
double quotient_f(const Params& p, double r);
double quotient_f(const Params& p, UnitArg r);

/// g(r) = F(a,b;a+b+1;r)/F(1/3,2/3;2;r).
double quotient_g(const Params& p, double r);
double quotient_g(const Params& p, UnitArg r);

/// J(r) = (1+2r^(1/3)) F(a,b;a+b;r) - F(a,b;a+b;z(r)).
double j_function(const Params& p, double r);

/// 2(R(a,b) - ln 27)/B(a,b), the r -> 1 limit of J.
double j_limit(const Params& p);

/// Check `claim` for (a,b) over grid (x-grid for the T2.5 parts). Never
/// throws on a violated inequality; evaluation errors propagate.
ScanReport verify_theorem(ClaimId claim, const Params& p, std::span<const double> grid,
                          double tol = kMarginTol);

/// Same, on the default grid.
ScanReport verify_theorem(ClaimId claim, const Params& p, double tol = kMarginTol);

/// Locate a sign change of the quotient's derivative and refine it by
/// bisection to a bracket no wider than 1e-6. nullopt when the quotient
/// is monotone at scan resolution.
std::optional<TurningPoint> find_turning_point(const Params& p, Quotient which);

/// Classify seq[0..n] with strict comparisons; exact ties are skipped.
/// Throws MixedPatternError on more than one reversal.
Trend sequence_trend(std::span<const double> seq);
Trend sequence_trend(const std::function<double(long)>& seq, long n_max);

/// A_n/A*_n for n = 0..n_max.
std::vector<double> coefficient_ratio_f(const Params& p, long n_max);
/// B_n/B*_n for n = 0..n_max.
std::vector<double> coefficient_ratio_g(const Params& p, long n_max);

/// Trend of the quotient's values over a grid of r.
Trend empirical_trend(const Params& p, Quotient which, std::span<const double> grid);

}  // namespace rcthyper
