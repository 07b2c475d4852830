#ifndef UAVDEPLOY_ANALYTIC_HEIGHTS_HPP
#define UAVDEPLOY_ANALYTIC_HEIGHTS_HPP

#include <functional>

namespace uavdeploy {

/// Even polar moments ∫_Δ ‖ω‖^{2k} dω of the fundamental right triangle Δ
/// (1/12 of a regular hexagon of area H, centred at the origin).
struct HexMoments {
  double H = 0.0;
  double m0 = 0.0;
  double m2 = 0.0;
  double m4 = 0.0;
  double m6 = 0.0;
};

HexMoments hex_moments(double H);

/// Inradius r and circumradius R of the regular hexagon of area H.
double hex_inradius(double H);
double hex_circumradius(double H);

/// ∫_Δ f(‖ω‖²) dω over the fundamental triangle, Gauss–Legendre in both
/// directions. Smooth integrands are resolved to machine precision.
double triangle_integral(double H, const std::function<double(double)> &f_of_r2);

struct CommonHeightSolution {
  double gamma = 0.0;
  double kappa = 0.0;
  double H = 0.0;
  double z = 0.0;        ///< h*²
  double h_star = 0.0;
  double c_factor = 0.0; ///< h* / √H
  double p_bar_star = 0.0;  ///< normalized optimal average power
};

/// g_γ(z) = ∫_Δ (2γ/κ)·z·(‖ω‖² + z)^{γ−1} − (‖ω‖² + z)^γ dω.
double critical_height_residual(double gamma, double kappa, double H, double z);

/// Closed forms for γ ∈ {1, 2, 3}; requires 1 ≤ κ ≤ 2γ − 1 (κ = 1 when γ = 1).
CommonHeightSolution solve_common_height_closed(int gamma, double kappa, double H);

/// Scaling factor c(γ, κ) of the closed form.
double common_height_factor(int gamma, double kappa);

/// Root of g_γ by bracketing (doubling) and TOMS 748; any real γ with 2γ/κ > 1.
CommonHeightSolution solve_common_height_numeric(double gamma, double kappa, double H, double rel_tol = 1e-14);

/// Discriminant q³ + p² of the γ = 3 depressed cubic at H = 1.
double cubic_discriminant(double kappa);

/// Average power (1/H)·∫_hex (‖ω‖² + h²)^γ / h^κ dω of one UAV over a
/// regular hexagon, UAV above the centroid (normalized mode).
double hexagon_average_power(double gamma, double kappa, double H, double h);

/// Optimal asymptotic average power at h* = c(γ,κ)√H from the moment
/// expansion. Physical mode divides by D0(κ).
double optimal_average_power(int gamma, double kappa, double H, bool normalized = true);

/// A second set of closed-form optimal-power expressions, carrying a
/// 1/D0(κ) prefactor. They agree with optimal_average_power only for some
/// (γ, κ); kept so the two can be compared side by side.
double alternate_power_expression(int gamma, double kappa, double H);

/// Brute-force optimal height: `samples` heights evenly spaced on (0, 2R],
/// UAV above the centroid; returns the lowest height attaining the minimum.
double brute_force_height(double H, double kappa, double alpha, int samples = 5000);

}  // namespace uavdeploy

#endif
