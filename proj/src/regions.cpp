#include "rcthyper/regions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace rcthyper {
namespace {

constexpr double kTwoNinths = 2.0 / 9.0;

bool strictly_inside(const Params& p, Region region, double margin) {
  const RegionExpressions e = region_expressions(p);
  const RegionLabel label = classify(p);
  if (!label.contains(region) || label.is_equality_point) return false;
  const bool gaps_clear =
      std::fabs(e.product_gap) >= margin && std::fabs(e.weighted_gap) >= margin;
  switch (region) {
    case Region::D5:
    case Region::D6:
      return std::fabs(e.sum_gap) >= margin && std::fabs(e.weighted_gap) >= margin;
    default:
      return gaps_clear;
  }
}

}  // namespace

bool RegionLabel::contains(Region r) const {
  switch (r) {
    case Region::D1: return in_d1;
    case Region::D2: return in_d2;
    case Region::D3: return in_d3;
    case Region::D4: return in_d4;
    case Region::D5: return in_d5;
    case Region::D6: return in_d6;
  }
  return false;
}

std::string RegionLabel::to_string() const {
  std::string out;
  const bool flags[] = {in_d1, in_d2, in_d3, in_d4, in_d5, in_d6};
  for (int i = 0; i < 6; ++i) {
    if (!flags[i]) continue;
    if (!out.empty()) out += ',';
    out += 'D';
    out += static_cast<char>('1' + i);
  }
  return out;
}

RegionExpressions region_expressions(const Params& p) {
  const double a = p.a();
  const double b = p.b();
  return {a * b - kTwoNinths, a * b - kTwoNinths * (a + b), a + b - 1.0};
}

RegionLabel classify(const Params& p, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw DomainError("classify: eps must be finite and non-negative");
  }
  const RegionExpressions e = region_expressions(p);
  const double u = e.product_gap;
  const double v = e.weighted_gap;
  const double t = e.sum_gap;

  RegionLabel out;
  out.in_d1 = u <= eps && v <= eps;
  out.in_d2 = u < eps && v > -eps;
  out.in_d3 = u >= -eps && v >= -eps;
  out.in_d4 = u > -eps && v < eps;
  out.in_d5 = t <= eps && v <= eps;
  out.in_d6 = t >= -eps && v >= -eps;

  constexpr double third = 1.0 / 3.0;
  constexpr double two_thirds = 2.0 / 3.0;
  out.is_equality_point = (p.a() == third && p.b() == two_thirds) ||
                          (p.a() == two_thirds && p.b() == third);
  return out;
}

double h_sequence(const Params& p, long n) {
  const RegionExpressions e = region_expressions(p);
  return e.product_gap * static_cast<double>(n) + e.weighted_gap;
}

double h_star_sequence(const Params& p, long n) {
  const double a = p.a();
  const double b = p.b();
  // a+b+ab-11/9 grouped as (a+b-1)+(ab-2/9) so it vanishes exactly at the
  // equality points.
  const double slope = (a + b - 1.0) + (a * b - kTwoNinths);
  const double intercept = kTwoNinths * (9.0 * a * b - a - b - 1.0);
  return slope * static_cast<double>(n) + intercept;
}

std::vector<Params> InteriorSampler::sample(Region region, std::size_t count) const {
  if (!(hi > lo && lo >= 0.0)) throw DomainError("InteriorSampler: need 0 <= lo < hi");
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(region) * 0x9E3779B97F4A7C15ull));
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<Params> out;
  out.reserve(count);
  const std::size_t max_draws = 10'000'000;
  for (std::size_t draw = 0; out.size() < count; ++draw) {
    if (draw == max_draws) {
      throw std::runtime_error("InteriorSampler: region has too little area in the sampling box");
    }
    const double a = dist(rng);
    const double b = dist(rng);
    if (a <= 0.0 || b <= 0.0) continue;
    const Params p(a, b);
    if (strictly_inside(p, region, margin)) out.push_back(p);
  }
  return out;
}

InteriorSampler default_sampler(Region region, std::uint64_t seed) {
  InteriorSampler s;
  s.seed = seed;
  switch (region) {
    case Region::D1: s.lo = 0.0; s.hi = 1.5; s.margin = 5e-3; break;
    case Region::D2: s.lo = 0.3; s.hi = 0.8; s.margin = 1e-3; break;
    case Region::D3: s.lo = 0.0; s.hi = 3.0; s.margin = 5e-3; break;
    case Region::D4: s.lo = 0.0; s.hi = 3.0; s.margin = 5e-2; break;
    case Region::D5: s.lo = 0.0; s.hi = 1.0; s.margin = 5e-3; break;
    case Region::D6: s.lo = 0.0; s.hi = 3.0; s.margin = 5e-3; break;
  }
  return s;
}

}  // namespace rcthyper
