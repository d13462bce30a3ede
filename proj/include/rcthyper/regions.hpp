#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcthyper/params.hpp"

namespace rcthyper {

enum class Region { D1 = 1, D2, D3, D4, D5, D6 };

/// Membership of (a,b) in the six parameter regions.
///
/// D1..D4 cover the positive quadrant, with D1 and D3 closed so they meet
/// only at the equality points (1/3,2/3) and (2/3,1/3). D5 is a subset of
/// D1 and D6 of D3.
struct RegionLabel {
  bool in_d1 = false;
  bool in_d2 = false;
  bool in_d3 = false;
  bool in_d4 = false;
  bool in_d5 = false;
  bool in_d6 = false;
  bool is_equality_point = false;

  bool contains(Region r) const;

  /// Comma-separated member list, e.g. "D1,D5"; empty if none.
  std::string to_string() const;
};

/// The three defining expressions; region flags are sign tests on these.
struct RegionExpressions {
  double product_gap;   ///< ab - 2/9
  double weighted_gap;  ///< ab - (2/9)(a+b)
  double sum_gap;       ///< a + b - 1
};

RegionExpressions region_expressions(const Params& p);

/// Flags from the exact binary64 signs of the defining expressions. A
/// positive eps widens every closed or open boundary test by eps, so
/// points within eps of a boundary land in both neighbours.
RegionLabel classify(const Params& p, double eps = 0.0);

/// H_n = (ab - 2/9) n + ab - (2/9)(a+b); its sign drives the monotonicity
/// of A_n/A*_n.
double h_sequence(const Params& p, long n);

/// H*_n = (a+b+ab-11/9) n + (2/9)(9ab-a-b-1); drives B_n/B*_n.
double h_star_sequence(const Params& p, long n);

/// Rejection sampler for points well inside a region.
///
/// Points are drawn uniformly from (lo, hi]^2 and kept when they belong to
/// the region and every defining expression relevant to it is at least
/// `margin` away from zero.
struct InteriorSampler {
  double lo = 0.0;
  double hi = 3.0;
  double margin = 1e-3;
  std::uint64_t seed = 20130701;

  std::vector<Params> sample(Region region, std::size_t count) const;
};

/// Sampler settings used by the test and acceptance suites for each region.
InteriorSampler default_sampler(Region region, std::uint64_t seed);

}  // namespace rcthyper
