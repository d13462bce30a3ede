#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rcthyper/special_core.hpp"

using namespace rcthyper;

TEST_CASE("log_gamma at reference points") {
  CHECK(log_gamma(1.0) == 0.0);
  // Gamma(1/2) = sqrt(pi)
  const double half = static_cast<double>(0.5L * std::log(std::numbers::pi_v<long double>));
  CHECK(half == doctest::Approx(0.5723649429247001).epsilon(1e-15));
  CHECK(std::fabs(log_gamma(0.5) - half) <= 1e-14);
  CHECK(std::fabs(log_gamma(5.0) - std::log(24.0)) <= 1e-14);
}

TEST_CASE("log_gamma agrees with the C library on [1e-3, 1e3]") {
  for (double z = 1e-3; z < 1e3; z *= 1.07) {
    const double ref = std::lgamma(z);
    CHECK(std::fabs(log_gamma(z) - ref) <= 1e-13 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("log_gamma and digamma reject non-positive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
  CHECK_THROWS_AS(log_gamma(INFINITY), DomainError);
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-2.0), DomainError);
}

TEST_CASE("digamma reference values") {
  const double gamma = oracle::euler_gamma();
  CHECK(std::fabs(gamma - kEulerGamma) <= 1e-15);
  CHECK(std::fabs(digamma(1.0) + gamma) <= 1e-12);
  CHECK(std::fabs(digamma(0.5) - (-gamma - 2.0 * std::numbers::ln2)) <= 1e-12);
  CHECK(std::fabs(digamma(2.0) - (1.0 - gamma)) <= 1e-12);
  CHECK(digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-15));
  CHECK(digamma(0.5) == doctest::Approx(-1.9635100260214235).epsilon(1e-15));
}

TEST_CASE("digamma matches the shifted-series oracle on [1e-3, 1e3]") {
  for (double z = 1e-3; z < 1e3; z *= 1.19) {
    CHECK(std::fabs(digamma(z) - oracle::digamma_series(z)) <= 1e-12);
  }
}

TEST_CASE("beta reference values") {
  CHECK(std::fabs(beta(Params(1.0 / 3.0, 2.0 / 3.0)) - 2.0 * std::numbers::sqrt3 * std::numbers::pi / 3.0) <= 1e-12);
  CHECK(beta(Params(1.0 / 3.0, 2.0 / 3.0)) == doctest::Approx(3.6275987284684357).epsilon(1e-14));
  CHECK(std::fabs(beta(Params(0.5, 0.5)) - std::numbers::pi) <= 1e-12 * std::numbers::pi);
  CHECK(std::fabs(beta(Params(1.0, 1.0)) - 1.0) <= 1e-14);
}

TEST_CASE("r_constant reference values") {
  CHECK(std::fabs(r_constant(Params(1.0 / 3.0, 2.0 / 3.0)) - std::log(27.0)) <= 1e-12);
  CHECK(std::fabs(kLog27 - std::log(27.0)) <= 1e-15);
  CHECK(std::fabs(r_constant(Params(1.0, 1.0))) <= 1e-12);
  CHECK(std::fabs(r_constant(Params(0.5, 0.5)) - 4.0 * std::numbers::ln2) <= 1e-12);
}

TEST_CASE("Params rejects invalid pairs") {
  CHECK_THROWS_AS(Params(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(Params(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(Params(std::nan(""), 1.0), DomainError);
  CHECK_THROWS_AS(Params(1.0, INFINITY), DomainError);
}

TEST_CASE("property: gamma and digamma recurrences, beta symmetry and contiguity") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(0.01, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double z = dist(rng);
    const double g1 = std::exp(log_gamma(z + 1.0));
    const double g0 = std::exp(log_gamma(z));
    REQUIRE(std::fabs(g1 - z * g0) / g1 <= 1e-12);
    REQUIRE(std::fabs(digamma(z + 1.0) - digamma(z) - 1.0 / z) <= 1e-11);

    const double w = dist(rng);
    const Params p(z, w);
    REQUIRE(beta(p) == beta(Params(w, z)));
    const double b1 = beta(Params(z + 1.0, w));
    REQUIRE(std::fabs(b1 - beta(p) * z / (z + w)) / b1 <= 1e-12);
  }
}
