#include "uavdeploy/power_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavdeploy {

double PowerParams::scale() const {
  return normalized ? 1.0 : 1.0 / (beta0 * directivity(kappa));
}

void PowerParams::validate() const {
  if (!(alpha >= 1.0)) throw std::domain_error("alpha must be >= 1");
  if (!(kappa >= 0.0)) throw std::domain_error("kappa must be >= 0");
  if (!(beta0 > 0.0)) throw std::domain_error("beta0 must be > 0");
  if (!(h_min > 0.0)) throw std::domain_error("h_min must be > 0");
}

double LinkBudget::min_rx_power() const {
  const double spectral = bitrate_bps / bandwidth_hz;
  const double p0 = (std::exp2(spectral) - 1.0) * noise_power_w;
  if (!std::isfinite(p0) || !(p0 > 0.0)) {
    throw std::domain_error("bitrate/bandwidth ratio gives a non-finite required power");
  }
  return p0;
}

double directivity(double kappa) {
  if (!(kappa >= 0.0)) throw std::domain_error("directivity: kappa must be >= 0");
  // κ = 0 is the isotropic pattern over the full sphere; any κ > 0 radiates
  // into the lower hemisphere only, with beam solid angle 2π/(κ + 1).
  if (kappa == 0.0) return 1.0;
  return 2.0 * (kappa + 1.0);
}

double hpbw_degrees(double kappa) {
  if (!(kappa >= 1.0)) throw std::domain_error("hpbw_degrees: kappa must be >= 1");
  // Extended precision keeps the κ = 1, 2 anchors (120°, 90°) exact after rounding.
  const long double half = std::acos(std::exp2(-1.0L / static_cast<long double>(kappa)));
  return static_cast<double>(half * (360.0L / std::numbers::pi_v<long double>));
}

double shadowing_mean(double sigma_db) {
  const double ln10 = std::numbers::ln10;
  return std::exp(sigma_db * sigma_db * ln10 * ln10 / 200.0);
}

double link_beta0(const LinkBudget &budget, double alpha) {
  if (!(budget.bandwidth_hz > 0.0) || !(budget.bitrate_bps > 0.0) || !(budget.noise_power_w > 0.0) ||
      !(budget.antenna_const_K > 0.0) || !(budget.tx_gain_Gt > 0.0) || !(budget.ref_distance_d0 > 0.0) ||
      !(budget.shadow_sigma_db >= 0.0)) {
    throw std::domain_error("link_beta0: link budget fields must be positive");
  }
  const double numerator = budget.antenna_const_K * budget.tx_gain_Gt *
                           std::pow(budget.ref_distance_d0, alpha) * shadowing_mean(budget.shadow_sigma_db);
  return numerator / budget.min_rx_power();
}

ExponentPow::ExponentPow(double exponent) : exponent_(exponent), kind_(Kind::general) {
  const double twice = 2.0 * exponent;
  if (exponent >= 0.0 && twice <= 16.0 && twice == std::floor(twice)) {
    const int t = static_cast<int>(twice);
    whole_ = t / 2;
    kind_ = (t % 2 == 0) ? Kind::integer : Kind::half_integer;
  }
}

double ExponentPow::operator()(double s) const {
  switch (kind_) {
    case Kind::integer:
    case Kind::half_integer: {
      double r = 1.0;
      for (int i = 0; i < whole_; ++i) r *= s;
      return kind_ == Kind::integer ? r : r * std::sqrt(s);
    }
    case Kind::general:
      break;
  }
  return std::pow(s, exponent_);
}

double power_kernel(double r2, double h, double gamma, double kappa) {
  return std::pow(r2 + h * h, gamma) / std::pow(h, kappa);
}

double tx_power(Vec2 user, Vec2 uav_ground, double h, const PowerParams &params) {
  if (!(h > 0.0)) throw std::domain_error("tx_power: height must be > 0");
  return params.scale() * power_kernel(norm2(user - uav_ground), h, params.gamma(), params.kappa);
}

double regularized_los(double elevation_rad, const LosParams &p) {
  if (!(elevation_rad >= 0.0) || !(elevation_rad <= std::numbers::pi / 2.0 + 1e-15)) {
    throw std::domain_error("regularized_los: elevation must lie in [0, pi/2]");
  }
  if (!(p.a > 0.0 && p.a < 90.0) || !(p.b > 0.0) || !(p.beta_nlos > 0.0 && p.beta_nlos <= 1.0)) {
    throw std::domain_error("regularized_los: invalid LoS parameters");
  }
  const double degrees = elevation_rad * 180.0 / std::numbers::pi;
  const double e = p.a * std::exp(-p.b * (degrees - p.a));
  return (1.0 + p.beta_nlos * e) / (1.0 + e);
}

}  // namespace uavdeploy
