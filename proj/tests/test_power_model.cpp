#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavdeploy/power_model.hpp"

using namespace uavdeploy;

TEST_CASE("directivity") {
  CHECK(directivity(0.0) == 1.0);
  CHECK(directivity(1.0) == 4.0);
  CHECK(directivity(2.0) == 6.0);
  CHECK(directivity(0.5) == 3.0);
  CHECK_THROWS_AS(directivity(-0.5), std::domain_error);
}

TEST_CASE("half-power beamwidth") {
  CHECK(hpbw_degrees(1.0) == 120.0);
  CHECK(hpbw_degrees(2.0) == 90.0);
  CHECK(hpbw_degrees(1e6) < 0.2);
  CHECK_THROWS_AS(hpbw_degrees(0.5), std::domain_error);

  // the cos^κ pattern is at half its peak on the beam edge
  for (double k : {1.0, 1.5, 3.0, 7.0}) {
    const double half = hpbw_degrees(k) / 2.0 * std::numbers::pi / 180.0;
    CHECK(std::pow(std::cos(half), k) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("link constant beta0") {
  LinkBudget b;
  CHECK(link_beta0(b, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  b.ref_distance_d0 = 2.0;
  CHECK(link_beta0(b, 2.0) == doctest::Approx(4.0).epsilon(1e-15));
  b.ref_distance_d0 = 1.0;
  b.shadow_sigma_db = 10.0;
  CHECK(link_beta0(b, 2.0) == doctest::Approx(14.16747798623771).epsilon(1e-13));

  b.bitrate_bps = 1e6;
  CHECK_THROWS_AS(link_beta0(b, 2.0), std::domain_error);
}

TEST_CASE("shadowing mean equals the lognormal expectation") {
  // E[10^{X/10}] for X ~ N(0, σ²) by direct integration
  const double sigma = 6.0;
  const double ln10 = std::numbers::ln10;
  auto f = [&](double x) {
    return std::exp(x * ln10 / 10.0) * std::exp(-x * x / (2.0 * sigma * sigma)) / (sigma * std::sqrt(2.0 * std::numbers::pi));
  };
  const double oracle = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -20.0 * sigma, 20.0 * sigma, 15, 1e-14);
  CHECK(shadowing_mean(sigma) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("transmit power kernel") {
  PowerParams p;
  CHECK(tx_power({0, 0}, {0, 0}, 2.0, p) == doctest::Approx(4.0).epsilon(1e-15));
  p.kappa = 2.0;
  CHECK(tx_power({1, 0}, {0, 0}, 1.0, p) == doctest::Approx(4.0).epsilon(1e-15));
  p.alpha = 1.0;
  p.kappa = 1.0;
  CHECK(tx_power({3, 4}, {0, 0}, 1.0, p) == doctest::Approx(26.0).epsilon(1e-15));

  // independent evaluation through the distance and the cosine of the angle
  p = PowerParams{};
  p.alpha = 2.5;
  p.kappa = 3.0;
  const Vec2 user{3.0, -1.0};
  const double h = 7.0;
  const double d = std::sqrt(10.0 + h * h);
  const double cos_theta = h / d;
  CHECK(tx_power(user, {}, h, p) == doctest::Approx(std::pow(d, p.alpha) / std::pow(cos_theta, p.kappa)).epsilon(1e-13));

  CHECK_THROWS_AS(tx_power(user, {}, 0.0, p), std::domain_error);
}

TEST_CASE("physical mode divides by beta0 times directivity") {
  PowerParams p;
  p.normalized = false;
  p.beta0 = 2.0;
  CHECK(tx_power({0, 0}, {0, 0}, 2.0, p) == doctest::Approx(4.0 / 8.0).epsilon(1e-15));
}

TEST_CASE("power blows up at both ends of the height range") {
  PowerParams p;
  const Vec2 u{10.0, 0.0};
  CHECK(tx_power(u, {}, 1e-6, p) > tx_power(u, {}, 5.0, p));
  CHECK(tx_power(u, {}, 1e6, p) > tx_power(u, {}, 10.0, p));
}

TEST_CASE("parameter validation") {
  PowerParams p;
  CHECK_NOTHROW(p.validate());
  p.alpha = 0.5;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = PowerParams{};
  p.h_min = 0.0;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = PowerParams{};
  p.beta0 = -1.0;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("fast exponent matches std::pow") {
  for (double e : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 4.0, 0.3, 1.75, 9.5}) {
    const ExponentPow f(e);
    for (double s : {1e-3, 0.7, 1.0, 3.5, 1e4}) CHECK(f(s) == doctest::Approx(std::pow(s, e)).epsilon(1e-14));
  }
}

TEST_CASE("regularized line-of-sight factor") {
  LosParams p;
  CHECK(regularized_los(p.a * std::numbers::pi / 180.0, p) == doctest::Approx(2.0 / 11.0).epsilon(1e-15));
  LosParams sharp{10.0, 5.0, 0.1};
  CHECK(regularized_los(std::numbers::pi / 2.0, sharp) == doctest::Approx(1.0).epsilon(1e-12));
  LosParams flat{10.0, 0.1, 1.0};
  for (double deg : {0.0, 15.0, 45.0, 90.0}) CHECK(regularized_los(deg * std::numbers::pi / 180.0, flat) == doctest::Approx(1.0));
  CHECK_THROWS_AS(regularized_los(-0.1, p), std::domain_error);
}
