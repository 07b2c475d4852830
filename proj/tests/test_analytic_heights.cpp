#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

#include "uavdeploy/analytic_heights.hpp"
#include "uavdeploy/power_model.hpp"

using namespace uavdeploy;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// ∫_Δ ‖ω‖^{2k} over the fundamental triangle by adaptive Gauss–Kronrod,
// independent of the library's fixed Gauss rule.
double oracle_moment(double H, int k) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double r = std::sqrt(H / (2.0 * kSqrt3));
  return GK::integrate(
      [&](double y) {
        return GK::integrate([&](double x) { return std::pow(x * x + y * y, k); }, kSqrt3 * y, r, 10, 1e-13);
      },
      0.0, r / kSqrt3, 10, 1e-13);
}

}  // namespace

TEST_CASE("hexagon moments") {
  CHECK(hex_moments(12.0).m0 == doctest::Approx(1.0));
  CHECK(hex_moments(1.0).m2 == doctest::Approx(5.0 / (216.0 * kSqrt3)).epsilon(1e-15));
  CHECK(hex_moments(1.0).m2 == doctest::Approx(0.013365).epsilon(1e-4));
  for (double H : {1.0, 100.0, 1e4}) {
    const HexMoments m = hex_moments(H);
    CHECK(m.m0 == doctest::Approx(oracle_moment(H, 0)).epsilon(1e-10));
    CHECK(m.m2 == doctest::Approx(oracle_moment(H, 1)).epsilon(1e-10));
    CHECK(m.m4 == doctest::Approx(oracle_moment(H, 2)).epsilon(1e-10));
    CHECK(m.m6 == doctest::Approx(oracle_moment(H, 3)).epsilon(1e-10));
  }
  CHECK(hex_circumradius(1.0) == doctest::Approx(std::sqrt(2.0 / (3.0 * kSqrt3))));
  CHECK_THROWS_AS(hex_moments(0.0), std::domain_error);
}

TEST_CASE("closed-form common heights") {
  CHECK(common_height_factor(1, 1.0) == doctest::Approx(std::sqrt(5.0 / (18.0 * kSqrt3))).epsilon(1e-15));
  // κ = 2 removes the linear term: z² = 14/405 at H = 1
  CHECK(common_height_factor(2, 2.0) == doctest::Approx(std::pow(14.0 / 405.0, 0.25)).epsilon(1e-14));

  const double frozen[][3] = {{2, 1, 0.2577985}, {2, 2, 0.4311896}, {2, 3, 0.7212006}, {3, 1, 0.2156868},
                              {3, 2, 0.3313908}, {3, 3, 0.4540455}, {3, 4, 0.6199204}, {3, 5, 0.9413100}};
  for (const auto &f : frozen) {
    CHECK(common_height_factor(static_cast<int>(f[0]), f[1]) == doctest::Approx(f[2]).epsilon(1e-6));
  }

  const CommonHeightSolution s = solve_common_height_closed(2, 1.0, 100.0);
  CHECK(s.h_star == doctest::Approx(s.c_factor * 10.0));
  CHECK(s.z == doctest::Approx(s.h_star * s.h_star));

  CHECK_THROWS_AS(solve_common_height_closed(1, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_common_height_closed(3, 6.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_common_height_closed(4, 1.0, 1.0), std::domain_error);
}

TEST_CASE("closed forms agree with the numeric root") {
  for (int g = 1; g <= 3; ++g) {
    for (int k = 1; k <= 2 * g - 1; ++k) {
      for (double H : {1.0, 250.0}) {
        const double closed = solve_common_height_closed(g, k, H).h_star;
        const double numeric = solve_common_height_numeric(g, k, H).h_star;
        CHECK(closed == doctest::Approx(numeric).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("numeric root for non-integer exponents") {
  const CommonHeightSolution s = solve_common_height_numeric(1.5, 1.0, 1.0);
  CHECK(critical_height_residual(1.5, 1.0, 1.0, s.z * 0.99) < 0.0);
  CHECK(critical_height_residual(1.5, 1.0, 1.0, s.z * 1.01) > 0.0);
  // the critical point minimizes the single-cell power
  const double p0 = hexagon_average_power(1.5, 1.0, 1.0, s.h_star);
  CHECK(p0 < hexagon_average_power(1.5, 1.0, 1.0, s.h_star * 1.01));
  CHECK(p0 < hexagon_average_power(1.5, 1.0, 1.0, s.h_star * 0.99));
  CHECK_THROWS_AS(solve_common_height_numeric(1.0, 2.0, 1.0), std::domain_error);
}

TEST_CASE("gamma = 1 height from the moment ratio") {
  const HexMoments m = hex_moments(1.0);
  CHECK(solve_common_height_closed(1, 1.0, 1.0).z == doctest::Approx(m.m2 / m.m0).epsilon(1e-14));
}

TEST_CASE("cubic discriminant stays positive") {
  for (double k = 1.0; k <= 5.0; k += 0.05) CHECK(cubic_discriminant(k) > 0.0);
}

TEST_CASE("optimal average power") {
  CHECK(optimal_average_power(1, 1.0, 1.0) == doctest::Approx(std::sqrt(10.0 / (9.0 * kSqrt3))).epsilon(1e-12));
  for (int g = 1; g <= 3; ++g) {
    for (int k = 1; k <= 2 * g - 1; ++k) {
      const double h = solve_common_height_closed(g, k, 1.0).h_star;
      CHECK(optimal_average_power(g, k, 1.0) == doctest::Approx(hexagon_average_power(g, k, 1.0, h)).epsilon(1e-10));
      CHECK(optimal_average_power(g, k, 1.0, false) ==
            doctest::Approx(optimal_average_power(g, k, 1.0) / directivity(k)).epsilon(1e-15));
    }
  }
  // scaling in H: P̄* ∝ H^{γ − κ/2}
  CHECK(optimal_average_power(2, 2.0, 100.0) == doctest::Approx(optimal_average_power(2, 2.0, 1.0) * 100.0).epsilon(1e-12));
}

TEST_CASE("alternate closed-form expressions") {
  // the alternate γ = 1 value differs from the derived one by 1/√5
  CHECK(alternate_power_expression(1, 1.0, 1.0) / optimal_average_power(1, 1.0, 1.0, false) ==
        doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
  // the alternate γ = 2 value is exact for κ = 1
  CHECK(alternate_power_expression(2, 1.0, 7.0) == doctest::Approx(optimal_average_power(2, 1.0, 7.0, false)).epsilon(1e-12));
}

TEST_CASE("brute-force height search") {
  CHECK(brute_force_height(1.0, 1.0, 1.0) == doctest::Approx(common_height_factor(1, 1.0)).epsilon(0.02));
  CHECK(brute_force_height(1.0, 1.0, 3.0) == doctest::Approx(common_height_factor(2, 1.0)).epsilon(0.02));
  CHECK(brute_force_height(1e4, 1.0, 1.0, 500) == doctest::Approx(100.0 * common_height_factor(1, 1.0)).epsilon(0.02));
  CHECK_THROWS_AS(brute_force_height(1.0, 1.0, 1.0, 1), std::invalid_argument);
}
