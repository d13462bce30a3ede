#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "rcthyper/hypergeometric.hpp"
#include "rcthyper/regions.hpp"
#include "rcthyper/special_core.hpp"

using namespace rcthyper;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(std::fabs(pochhammer(1.0 / 3.0, 2) - 4.0 / 9.0) <= 1e-16);
  CHECK(pochhammer(5.0, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(std::isinf(pochhammer(10.0, 400)));
}

TEST_CASE("HypParams validation") {
  CHECK_THROWS_AS(HypParams(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(HypParams(1.0, 1.0, -2.0), DomainError);
  CHECK_THROWS_AS(HypParams(1.0, std::nan(""), 2.0), DomainError);
}

TEST_CASE("hyp2f1 reference values") {
  const HypParams log_params(1.0, 1.0, 2.0);
  CHECK(rel(hyp2f1(log_params, 0.5).value, oracle::log_ratio(0.5)) <= 1e-14);
  CHECK(hyp2f1(log_params, 0.5).value == doctest::Approx(1.3862943611198906).epsilon(1e-14));
  CHECK(hyp2f1(HypParams(0.3, 0.7, 1.9), 0.0).value == 1.0);

  const double k = hyp2f1(HypParams(0.5, 0.5, 1.0), 0.25).value;
  CHECK(std::fabs(k - 1.0 / oracle::agm(1.0, std::sqrt(0.75))) <= 1e-14);
  CHECK(std::fabs(k - 1.0731820) <= 1e-6);
}

TEST_CASE("hyp2f1 rejects arguments outside [0,1)") {
  const HypParams p(1.0, 1.0, 2.0);
  CHECK_THROWS_AS(hyp2f1(p, 1.0), DomainError);
  CHECK_THROWS_AS(hyp2f1(p, 1.5), DomainError);
  CHECK_THROWS_AS(hyp2f1(p, -0.1), DomainError);
  CHECK_THROWS_AS(hyp2f1(p, std::nan("")), DomainError);
}

TEST_CASE("hyp2f1 against closed forms across the unit interval") {
  for (double x : {0.01, 0.3, 0.6, 0.75, 0.76, 0.9, 0.99, 0.999999}) {
    CAPTURE(x);
    CHECK(rel(hyp2f1(HypParams(1, 1, 2), x).value, oracle::log_ratio(x)) <= 1e-13);
    CHECK(rel(hyp2f1(HypParams(1, 1, 3), x).value, oracle::f113(x)) <= 1e-12);
    CHECK(rel(hyp2f1(HypParams(2, 2, 3), x).value, oracle::f223(x)) <= 1e-12);
  }
}

TEST_CASE("complement argument keeps precision when x rounds to 1") {
  const double eps = 1e-21;
  const auto r = hyp2f1(HypParams(1, 1, 2), UnitArg::from_complement(eps));
  CHECK(rel(r.value, -std::log(eps)) <= 1e-14);
  CHECK(r.method == Method::log_connection);
}

TEST_CASE("method selection") {
  CHECK(hyp2f1(HypParams(0.2, 0.2, 0.4), 0.5).method == Method::direct_series);
  CHECK(hyp2f1(HypParams(0.2, 0.2, 0.4), 0.8).method == Method::log_connection);
  CHECK(hyp2f1(HypParams(0.2, 0.2, 1.4), 0.8).method == Method::log_connection);
  CHECK(hyp2f1(HypParams(0.2, 0.3, 1.0), 0.8).method == Method::direct_series);
  CHECK(hyp2f1(HypParams(0.2, 0.3, 1.0), UnitArg::from_complement(1e-30)).method == Method::terminal_limit);
}

TEST_CASE("Euler transform path for c < a + b") {
  // F(2,2;3;x) has c-a-b = -1.
  for (double x : {0.8, 0.95, 0.9999}) {
    CAPTURE(x);
    CHECK(rel(hyp2f1(HypParams(2, 2, 3), x).value, oracle::f223(x)) <= 1e-12);
  }
  // Non-integer negative excess against the long double series at moderate x.
  const double x = 0.8;
  CHECK(rel(hyp2f1(HypParams(0.7, 0.9, 1.3), x).value, oracle::hyp2f1_series(0.7, 0.9, 1.3, x)) <= 1e-12);
}

TEST_CASE("log connection against long double series at 0.8 and 0.9") {
  for (auto [a, b] : {std::pair{0.2, 0.2}, {1.0 / 3.0, 2.0 / 3.0}, {0.46, 0.46}, {1.5, 0.7}, {0.1, 3.0}}) {
    for (double x : {0.8, 0.9}) {
      for (double m : {0.0, 1.0, 2.0}) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(x);
        CAPTURE(m);
        const double want = oracle::hyp2f1_series(a, b, a + b + m, x);
        CHECK(rel(hyp2f1(HypParams(a, b, a + b + m), x).value, want) <= 1e-12);
      }
    }
  }
}

TEST_CASE("hyp2f1_log_connection rejects non-integer excess") {
  CHECK_THROWS_AS(hyp2f1_log_connection(HypParams(0.2, 0.3, 1.0), UnitArg::from_x(0.9)), DomainError);
}

TEST_CASE("term cap reports non-convergence") {
  SeriesOptions opt;
  opt.max_terms = 5;
  const auto r = hyp2f1_direct_series(HypParams(1, 1, 2), 0.7, opt);
  CHECK_FALSE(r.converged);
  CHECK(r.terms == 6);  // leading 1 plus the capped terms
  CHECK(r.abs_err_estimate > 0.0);
}

TEST_CASE("derivative reference values") {
  CHECK(hyp2f1_derivative(HypParams(1, 1, 2), 0.0).value == 0.5);
  CHECK(std::fabs(hyp2f1_derivative(HypParams(1.0 / 3.0, 2.0 / 3.0, 1.0), 0.0).value - 2.0 / 9.0) <= 1e-16);
  const double d = hyp2f1_derivative(HypParams(1, 1, 2), 0.5).value;
  CHECK(rel(d, oracle::log_ratio_derivative(0.5)) <= 1e-13);
  CHECK(d == doctest::Approx(1.2274112777602189).epsilon(1e-13));
}

TEST_CASE("contiguous relation residual") {
  CHECK(contiguous_check(Params(1.0 / 3.0, 2.0 / 3.0), 0.5) <= 1e-10);
  CHECK(contiguous_check(Params(1.0, 1.0), 0.25) <= 1e-10);
  CHECK(contiguous_check(Params(0.7, 2.0), 1e-9) <= 1e-15);
  // Independent check with closed forms: (1-x) F(2,2;3;x) = F(1,1;3;x).
  CHECK(rel((1 - 0.25) * oracle::f223(0.25), oracle::f113(0.25)) <= 1e-14);
}

TEST_CASE("zero_balanced_asymptotic") {
  const Params eq(1.0 / 3.0, 2.0 / 3.0);
  const double r = 1.0 - 1e-8;
  const double want = (std::log(27.0) + 8.0 * std::log(10.0)) / beta(eq);
  CHECK(std::fabs(zero_balanced_asymptotic(eq, r) - want) <= 1e-6);
  CHECK(want == doctest::Approx(5.986).epsilon(1e-3));
  const double f = zb_f(eq, UnitArg::from_complement(1e-8));
  CHECK(std::fabs(f - want) <= 1e-6);
  CHECK(std::fabs(zero_balanced_asymptotic(Params(1, 1), 0.99) - std::log(100.0)) <= 1e-12);
  CHECK_THROWS_AS(zero_balanced_asymptotic(eq, 0.5), DomainError);
  CHECK_THROWS_AS(zero_balanced_asymptotic(eq, 1.0), DomainError);
}

TEST_CASE("series coefficient sequences") {
  const auto a = SeriesCoefficients::a_n(Params(1, 1), 10);
  for (long n = 0; n <= 10; ++n) CHECK(std::fabs(a[n] - 1.0 / (n + 1)) <= 1e-15);
  const auto star = SeriesCoefficients::a_star_n(3);
  CHECK(std::fabs(star[1] - 2.0 / 9.0) <= 1e-16);
  CHECK(std::fabs(star[2] - (1.0 / 3 * 4.0 / 3 * 2.0 / 3 * 5.0 / 3) / 4.0) <= 1e-16);
  const auto bs = SeriesCoefficients::b_star_n(1);
  CHECK(std::fabs(bs[1] - 1.0 / 9.0) <= 1e-16);
}

TEST_CASE("RCT_HYPER_MAX_TERMS caps the series") {
  // Read once per process; only check the parser contract here.
  const auto opt = SeriesOptions::from_environment();
  CHECK(opt.max_terms > 0);
}

TEST_CASE("property: parameter symmetry") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> par(0.05, 3.0);
  std::uniform_real_distribution<double> arg(0.0, 0.99);
  for (int i = 0; i < 300; ++i) {
    const double a = par(rng), b = par(rng), c = par(rng), x = arg(rng);
    const double v1 = hyp2f1(HypParams(a, b, c), x).value;
    const double v2 = hyp2f1(HypParams(b, a, c), x).value;
    REQUIRE(rel(v1, v2) <= 1e-13);
  }
}

TEST_CASE("property: strictly increasing in x") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> par(0.05, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double a = par(rng), b = par(rng);
    for (double m : {0.0, 1.0, 0.5}) {
      const HypParams p(a, b, a + b + m);
      double prev = hyp2f1(p, 0.0).value;
      for (int k = 1; k < 100; ++k) {
        const double v = hyp2f1(p, k / 100.0).value;
        REQUIRE(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("property: direct series and log connection agree on [0.75, 0.9]") {
  for (Region reg : {Region::D1, Region::D3}) {
    for (const Params& p : default_sampler(reg, 11).sample(reg, 40)) {
      const HypParams hp = HypParams::zero_balanced(p);
      for (double x = 0.75; x <= 0.9 + 1e-12; x += 0.01) {
        const double d = hyp2f1_direct_series(hp, x).value;
        const double l = hyp2f1_log_connection(hp, UnitArg::from_x(x)).value;
        REQUIRE(rel(d, l) <= 1e-9);
      }
    }
  }
}

TEST_CASE("property: divergence law near 1") {
  for (const Params& p : default_sampler(Region::D1, 12).sample(Region::D1, 20)) {
    const double k = 1e-6;
    const double f = zb_f(p, UnitArg::from_complement(k));
    const double resid = std::fabs(beta(p) * f + std::log(k) - r_constant(p));
    REQUIRE(resid <= 100.0 * k * std::fabs(std::log(k)));
  }
}

TEST_CASE("property: derivative matches central differences") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> par(0.05, 3.0);
  for (int i = 0; i < 40; ++i) {
    const double a = par(rng), b = par(rng);
    for (double m : {0.0, 1.0}) {
      const HypParams p(a, b, a + b + m);
      for (double x = 0.05; x <= 0.9 + 1e-12; x += 0.05) {
        const double fd = oracle::central_difference([&](double t) { return hyp2f1(p, t).value; }, x, 1e-6);
        const double v = hyp2f1_derivative(p, x).value;
        REQUIRE(std::fabs(v - fd) <= 1e-5 * (1 + std::fabs(v)));
      }
    }
  }
}
