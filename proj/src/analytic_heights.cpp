#include "uavdeploy/analytic_heights.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "uavdeploy/power_model.hpp"

namespace uavdeploy {

namespace {

const double kSqrt3 = std::sqrt(3.0);
// c(1)² = 5 / (18√3)
const double kBaseFactor = 5.0 / (18.0 * kSqrt3);

void check_area(double H) {
  if (!(H > 0.0) || !std::isfinite(H)) throw std::domain_error("hexagon area must be positive");
}

void check_closed_form_range(int gamma, double kappa) {
  if (gamma < 1 || gamma > 3) {
    throw std::domain_error("closed forms exist only for gamma in {1, 2, 3}");
  }
  if (!(kappa >= 1.0) || !(kappa <= 2.0 * gamma - 1.0)) {
    throw std::domain_error("kappa must lie in [1, 2*gamma - 1], got " + std::to_string(kappa));
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HexMoments hex_moments(double H) {
  check_area(H);
  HexMoments m;
  m.H = H;
  m.m0 = H / 12.0;
  m.m2 = 5.0 * H * H / (216.0 * kSqrt3);
  m.m4 = 7.0 * H * H * H / 2430.0;
  m.m6 = 83.0 * H * H * H * H / (72.0 * 35.0 * 27.0 * kSqrt3);
  return m;
}

double hex_inradius(double H) {
  check_area(H);
  return std::sqrt(H / (2.0 * kSqrt3));
}

double hex_circumradius(double H) { return 2.0 * hex_inradius(H) / kSqrt3; }

double triangle_integral(double H, const std::function<double(double)> &f_of_r2) {
  using Rule = boost::math::quadrature::gauss<double, 30>;
  const double r = hex_inradius(H);
  // Δ = {0 ≤ y ≤ r/√3, √3·y ≤ x ≤ r}
  return Rule::integrate(
      [&](double y) {
        return Rule::integrate([&](double x) { return f_of_r2(x * x + y * y); }, kSqrt3 * y, r);
      },
      0.0, r / kSqrt3);
}

double critical_height_residual(double gamma, double kappa, double H, double z) {
  const double lead = 2.0 * gamma / kappa;
  return triangle_integral(H, [&](double r2) {
    const double s = r2 + z;
    return lead * z * std::pow(s, gamma - 1.0) - std::pow(s, gamma);
  });
}

double common_height_factor(int gamma, double kappa) {
  check_closed_form_range(gamma, kappa);
  switch (gamma) {
    case 1:
      // z = κ/(2−κ)·M2/M0
      return std::sqrt(kBaseFactor * kappa / (2.0 - kappa));
    case 2:
      return std::sqrt(kBaseFactor * (std::sqrt((172.0 - 43.0 * kappa) * kappa / 125.0 + 4.0) - (2.0 - kappa)) /
                       (4.0 - kappa));
    default: {
      const double k = kappa;
      const double u = (143360.0 - 16728.0 * k - 444.0 * k * k + 37.0 * k * k * k) / 4375.0;
      const double v = 12.0 * (6.0 - k) / 4375.0 * std::sqrt(3.0 / 5.0) *
                       std::sqrt(6607552.0 + 659680.0 * k + 103387.0 * k * k - 108408.0 * k * k * k +
                                 9034.0 * k * k * k * k);
      // real cube roots; u − v may be negative
      return std::sqrt(kBaseFactor * (std::cbrt(u - v) + std::cbrt(u + v) - (4.0 - k)) / (6.0 - k));
    }
  }
}

double cubic_discriminant(double kappa) {
  const double k = kappa;
  const double q = (43.0 * k * k - 344.0 * k + 16.0) / (4860.0 * (6.0 - k) * (6.0 - k));
  const double p = (-143360.0 + 16728.0 * k + 444.0 * k * k - 37.0 * k * k * k) /
                   (612360.0 * kSqrt3 * (6.0 - k) * (6.0 - k) * (6.0 - k));
  return q * q * q + p * p;
}

double hexagon_average_power(double gamma, double kappa, double H, double h) {
  if (!(h > 0.0)) throw std::domain_error("hexagon_average_power: height must be > 0");
  const double z = h * h;
  const double integral = triangle_integral(H, [&](double r2) { return std::pow(r2 + z, gamma); });
  return 12.0 / H * integral / std::pow(h, kappa);
}

double optimal_average_power(int gamma, double kappa, double H, bool normalized) {
  check_closed_form_range(gamma, kappa);
  check_area(H);
  const HexMoments m = hex_moments(H);
  const double moments[] = {m.m0, m.m2, m.m4, m.m6};
  const double h = common_height_factor(gamma, kappa) * std::sqrt(H);
  double integral = 0.0;
  for (int j = 0; j <= gamma; ++j) {
    integral += binomial(gamma, j) * std::pow(h, 2.0 * (gamma - j)) * moments[j];
  }
  const double p = 12.0 / H * integral / std::pow(h, kappa);
  return normalized ? p : p / directivity(kappa);
}

double alternate_power_expression(int gamma, double kappa, double H) {
  check_closed_form_range(gamma, kappa);
  check_area(H);
  const double c = common_height_factor(gamma, kappa);
  switch (gamma) {
    case 1:
      return std::sqrt(2.0 / (9.0 * kSqrt3)) * std::sqrt(H) / directivity(1.0);
    case 2:
      return (14.0 / (405.0 * c) + 5.0 * c / (9.0 * kSqrt3) + c * c * c) * std::pow(H, 1.5) / directivity(kappa);
    default:
      return (83.0 / (195.0 * 27.0 * c) + 14.0 * c / 135.0 + 5.0 * c * c * c / (9.0 * kSqrt3) + std::pow(c, 5.0)) *
             std::pow(H, 2.5) / directivity(kappa);
  }
}

CommonHeightSolution solve_common_height_closed(int gamma, double kappa, double H) {
  check_closed_form_range(gamma, kappa);
  check_area(H);
  CommonHeightSolution s;
  s.gamma = gamma;
  s.kappa = kappa;
  s.H = H;
  s.c_factor = common_height_factor(gamma, kappa);
  s.h_star = s.c_factor * std::sqrt(H);
  s.z = s.h_star * s.h_star;
  s.p_bar_star = optimal_average_power(gamma, kappa, H, true);
  return s;
}

CommonHeightSolution solve_common_height_numeric(double gamma, double kappa, double H, double rel_tol) {
  check_area(H);
  if (!(gamma >= 1.0) || !(kappa > 0.0) || !(2.0 * gamma / kappa > 1.0)) {
    throw std::domain_error("numeric common height requires gamma >= 1, kappa > 0 and 2*gamma/kappa > 1");
  }
  auto g = [&](double z) { return critical_height_residual(gamma, kappa, H, z); };

  double lo = 0.0;
  double g_lo = g(lo);
  double hi = H;
  double g_hi = g(hi);
  for (int i = 0; g_hi <= 0.0; ++i) {
    if (i >= 200) throw std::runtime_error("numeric common height: no sign change found");
    lo = hi;
    g_lo = g_hi;
    hi *= 2.0;
    g_hi = g(hi);
  }

  const int bits = std::max(8, std::min(std::numeric_limits<double>::digits - 2,
                                        static_cast<int>(-std::log2(rel_tol))));
  std::uintmax_t max_iter = 200;
  const auto bracket = boost::math::tools::toms748_solve(g, lo, hi, g_lo, g_hi,
                                                         boost::math::tools::eps_tolerance<double>(bits), max_iter);
  CommonHeightSolution s;
  s.gamma = gamma;
  s.kappa = kappa;
  s.H = H;
  s.z = 0.5 * (bracket.first + bracket.second);
  s.h_star = std::sqrt(s.z);
  s.c_factor = s.h_star / std::sqrt(H);
  s.p_bar_star = hexagon_average_power(gamma, kappa, H, s.h_star);
  return s;
}

double brute_force_height(double H, double kappa, double alpha, int samples) {
  check_area(H);
  if (samples < 2) throw std::invalid_argument("brute_force_height: need at least 2 samples");
  const double gamma = 0.5 * (alpha + kappa);
  const double length = 2.0 * hex_circumradius(H);
  double best_h = 0.0;
  double best_p = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= samples; ++i) {
    const double h = length * i / samples;
    const double p = hexagon_average_power(gamma, kappa, H, h);
    if (p < best_p) {
      best_p = p;
      best_h = h;
    }
  }
  return best_h;
}

}  // namespace uavdeploy
