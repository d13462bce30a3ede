#include <doctest.h>

#include <random>

#include "rcthyper/regions.hpp"

using namespace rcthyper;

TEST_CASE("classify reference points") {
  const auto l = classify(Params(0.2, 0.2));
  CHECK(l.to_string() == "D1,D5");
  CHECK_FALSE(l.is_equality_point);

  CHECK(classify(Params(1, 1)).to_string() == "D3,D6");

  const auto eq = classify(Params(1.0 / 3.0, 2.0 / 3.0));
  CHECK(eq.in_d1);
  CHECK(eq.in_d3);
  CHECK(eq.is_equality_point);
  CHECK(classify(Params(2.0 / 3.0, 1.0 / 3.0)).is_equality_point);

  CHECK(classify(Params(0.46, 0.46)).to_string() == "D2");
  CHECK(classify(Params(0.1, 3.0)).to_string() == "D4");
}

TEST_CASE("region expressions") {
  const auto e = region_expressions(Params(0.46, 0.46));
  CHECK(e.product_gap < 0.0);
  CHECK(e.weighted_gap == doctest::Approx(0.2116 - 2.0 / 9.0 * 0.92));
  CHECK(e.sum_gap == doctest::Approx(-0.08));
}

TEST_CASE("eps widens boundaries") {
  // (0.4, 0.5) sits within 1e-15 of the D1/D2 boundary.
  const Params p(0.4, 0.5);
  const auto wide = classify(p, 1e-9);
  CHECK(wide.in_d1);
  CHECK(wide.in_d2);
}

TEST_CASE("H sequences") {
  const Params eq(1.0 / 3.0, 2.0 / 3.0);
  for (long n : {0L, 1L, 7L, 100L}) {
    CHECK(h_sequence(eq, n) == 0.0);
    CHECK(h_star_sequence(eq, n) == 0.0);
  }
  CHECK(h_sequence(Params(0.2, 0.2), 0) == doctest::Approx(0.04 - 0.4 * 2.0 / 9.0));
  CHECK(h_sequence(Params(0.2, 0.2), 0) < 0.0);
  const double expect = (0.8 + 0.15 - 11.0 / 9.0) + 2.0 / 9.0 * (1.35 - 1.8);
  CHECK(h_star_sequence(Params(0.3, 0.5), 1) == doctest::Approx(expect));
  CHECK(h_star_sequence(Params(0.3, 0.5), 1) < 0.0);
  CHECK(h_star_sequence(Params(1, 1), 0) == doctest::Approx(2.0 / 9.0 * 6.0));
}

TEST_CASE("sampler honours region and determinism") {
  for (Region r : {Region::D1, Region::D2, Region::D3, Region::D4, Region::D5, Region::D6}) {
    const auto s = default_sampler(r, 5);
    const auto pts = s.sample(r, 30);
    REQUIRE(pts.size() == 30);
    for (const Params& p : pts) {
      REQUIRE(classify(p).contains(r));
      REQUIRE_FALSE(classify(p).is_equality_point);
    }
    REQUIRE(pts == s.sample(r, 30));
  }
}

TEST_CASE("property: D1..D4 partition the quadrant") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  int done = 0;
  while (done < 10000) {
    const double a = dist(rng), b = dist(rng);
    if (a <= 0.0 || b <= 0.0) continue;
    const Params p(a, b);
    const auto e = region_expressions(p);
    if (e.product_gap == 0.0 || e.weighted_gap == 0.0) continue;
    const auto l = classify(p);
    REQUIRE(int(l.in_d1) + int(l.in_d2) + int(l.in_d3) + int(l.in_d4) == 1);
    if (l.in_d5) REQUIRE(l.in_d1);
    if (l.in_d6) REQUIRE(l.in_d3);
    ++done;
  }
}

TEST_CASE("property: subset relations on samples") {
  for (const Params& p : default_sampler(Region::D5, 1).sample(Region::D5, 200)) REQUIRE(classify(p).in_d1);
  for (const Params& p : default_sampler(Region::D6, 1).sample(Region::D6, 200)) REQUIRE(classify(p).in_d3);
}

TEST_CASE("property: sign coherence of H and H*") {
  for (const Params& p : default_sampler(Region::D1, 2).sample(Region::D1, 200)) {
    for (long n = 0; n <= 100; ++n) REQUIRE(h_sequence(p, n) < 0.0);
  }
  for (const Params& p : default_sampler(Region::D3, 2).sample(Region::D3, 200)) {
    REQUIRE(h_sequence(p, 0) >= 0.0);
    for (long n = 1; n <= 100; ++n) REQUIRE(h_sequence(p, n) > 0.0);
  }
  for (const Params& p : default_sampler(Region::D5, 2).sample(Region::D5, 200)) {
    for (long n = 0; n <= 100; ++n) REQUIRE(h_star_sequence(p, n) < 0.0);
  }
  for (const Params& p : default_sampler(Region::D6, 2).sample(Region::D6, 200)) {
    for (long n = 1; n <= 100; ++n) REQUIRE(h_star_sequence(p, n) > 0.0);
  }
}
