#ifndef UAVDEPLOY_POWER_MODEL_HPP
#define UAVDEPLOY_POWER_MODEL_HPP

#include "uavdeploy/geometry.hpp"

namespace uavdeploy {

/// Path-loss / antenna parameters of the uplink power model.
///
/// The required transmit power of a user at ground distance r from a UAV
/// flying at height h is (r² + h²)^γ / h^κ with γ = (α + κ)/2, scaled by
/// 1/(β0·D0(κ)) in physical mode. Normalized mode sets β0·D0 = 1, which
/// leaves every optimal deployment unchanged.
struct PowerParams {
  double alpha = 2.0;   ///< path-loss exponent, >= 1
  double kappa = 1.0;   ///< cosine antenna exponent, >= 0
  double beta0 = 1.0;   ///< combined link constant, > 0
  double h_min = 1.0;   ///< minimum flight height [m], > 0
  bool normalized = true;

  double gamma() const { return 0.5 * (alpha + kappa); }
  /// Multiplier applied to the geometric kernel: 1 or 1/(β0·D0(κ)).
  double scale() const;
  /// Throws std::domain_error when a field is outside its domain.
  void validate() const;

  friend bool operator==(const PowerParams &, const PowerParams &) = default;
};

struct LinkBudget {
  double bandwidth_hz = 1.0;
  double bitrate_bps = 1.0;
  double noise_power_w = 1.0;
  double antenna_const_K = 1.0;
  double tx_gain_Gt = 1.0;
  double ref_distance_d0 = 1.0;
  double shadow_sigma_db = 0.0;

  /// Minimum received power (2^{Rb/B} − 1)·N0.
  double min_rx_power() const;
};

struct LosParams {
  double a = 10.0;
  double b = 0.1;
  double beta_nlos = 0.1;
};

/// Directivity 4π/Ω_A(κ): 1 for the isotropic κ = 0, otherwise 2(κ + 1).
double directivity(double kappa);

/// Half-power beamwidth 2·acos(2^{−1/κ}) in degrees.
double hpbw_degrees(double kappa);

/// Linear mean of the lognormal shadowing factor, exp(σ_dB²·ln²10/200).
double shadowing_mean(double sigma_db);

/// β0(α) = K·Gt·d0^α·σψ² / ((2^{Rb/B} − 1)·N0).
double link_beta0(const LinkBudget &budget, double alpha);

/// Kernel (r² + h²)^γ / h^κ evaluated from the squared ground distance.
double power_kernel(double r2, double h, double gamma, double kappa);

/// s ↦ s^e for a fixed exponent, with fast paths for the integer and
/// half-integer exponents that integer α and κ produce.
class ExponentPow {
 public:
  explicit ExponentPow(double exponent);
  double operator()(double s) const;

 private:
  double exponent_;
  int whole_ = 0;
  enum class Kind { integer, half_integer, general } kind_;
};

double tx_power(Vec2 user, Vec2 uav_ground, double h, const PowerParams &params);

/// Probabilistic LoS/NLoS attenuation mix for an elevation angle in radians.
double regularized_los(double elevation_rad, const LosParams &p);

}  // namespace uavdeploy

#endif
