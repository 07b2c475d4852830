// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// on the command line to run a subset, e.g. `acceptance 1 5 11`.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uavdeploy/analytic_heights.hpp"
#include "uavdeploy/baselines.hpp"
#include "uavdeploy/density.hpp"
#include "uavdeploy/lloyd.hpp"
#include "uavdeploy/power_model.hpp"
#include "uavdeploy/tessellation.hpp"

using namespace uavdeploy;

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char *f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const Polygon kSquareKm = Polygon::rectangle({0, 0}, {1000, 1000});

PowerParams params(double alpha, double kappa, double h_min) {
  PowerParams p;
  p.alpha = alpha;
  p.kappa = kappa;
  p.h_min = h_min;
  return p;
}

// ---------------------------------------------------------------- 1
Outcome hexagon_moments() {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double worst = 0.0;
  for (double H : {1.0, 100.0, 1e4}) {
    const HexMoments m = hex_moments(H);
    const double r = hex_inradius(H);
    const double closed[] = {m.m0, m.m2, m.m4, m.m6};
    for (int k = 0; k <= 3; ++k) {
      const double q = GK::integrate(
          [&](double y) { return GK::integrate([&](double x) { return std::pow(x * x + y * y, k); }, kSqrt3 * y, r, 8, 1e-12); },
          0.0, r / kSqrt3, 8, 1e-12);
      worst = std::max(worst, rel(q, closed[k]));
    }
  }
  return {worst < 1e-6, fmt("max rel error %.2e (tol 1e-6)", worst)};
}

// ---------------------------------------------------------------- 2
Outcome gamma_one_height() {
  const double c1 = common_height_factor(1, 1.0);
  const double formula = std::sqrt(5.0 / (18.0 * kSqrt3));
  bool pass = rel(c1, formula) < 1e-14;
  double worst = 0.0;
  for (double H : {1.0, 100.0, 1e4}) {
    const double hb = brute_force_height(H, 1.0, 1.0, 5000);
    worst = std::max(worst, rel(hb, c1 * std::sqrt(H)));
  }
  pass = pass && worst < 0.02;
  return {pass, fmt("c(1) = %.6f, brute force max rel gap %.2e (tol 2e-2)", c1, worst)};
}

// ---------------------------------------------------------------- 3
Outcome triple_agreement() {
  double worst_numeric = 0.0, worst_brute = 0.0;
  for (int g : {2, 3}) {
    for (double k : {1.0, double(g), 2.0 * g - 1.0}) {
      for (double H : {1.0, 100.0}) {
        const double closed = solve_common_height_closed(g, k, H).h_star;
        const double numeric = solve_common_height_numeric(g, k, H).h_star;
        const double brute = brute_force_height(H, k, 2.0 * g - k, 5000);
        worst_numeric = std::max(worst_numeric, rel(closed, numeric));
        worst_brute = std::max(worst_brute, rel(brute, closed));
      }
    }
  }
  return {worst_numeric < 1e-8 && worst_brute < 0.02,
          fmt("closed vs numeric %.2e (tol 1e-8), closed vs brute force %.2e (tol 2e-2)", worst_numeric, worst_brute)};
}

// ---------------------------------------------------------------- 4
Outcome gradient_checks() {
  const RegionRaster raster = RegionRaster::build(kSquareKm, 512);
  const DensityGrid uniform = discretize(DensityField::uniform(), raster);
  const DensityGrid mixture =
      discretize(DensityField::gaussian_mixture({{0.5, {300, 300}, 150}, {0.25, {600, 700}, 100}, {0.25, {750, 250}, 200}}),
                 raster);
  const double step = 1e-3 * std::hypot(raster.geometry.dx, raster.geometry.dy);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> hu(25.0, 150.0);
  const int sizes[] = {1, 3, 8};
  double worst = 0.0;
  int checked = 0;
  for (int config = 0; config < 20; ++config) {
    const int n_uav = sizes[config % 3];
    const PowerParams p = params(config % 2 ? 3.0 : 2.0, config % 4 < 2 ? 1.0 : 2.0, 25.0);
    const DensityGrid &dens = config % 5 == 4 ? mixture : uniform;
    Deployment d = random_deployment(n_uav, kSquareKm, 100.0, 25.0, rng());
    for (double &h : d.heights) h = hu(rng);
    const AssignmentGrid grid = assign_cells(d, raster, p);
    const Gradients g = gradients(d, grid, dens, p);
    auto fd = [&](std::size_t n, int which) {
      Deployment plus = d, minus = d;
      auto bump = [&](Deployment &x, double s) {
        if (which == 0) x.ground[n].x += s;
        if (which == 1) x.ground[n].y += s;
        if (which == 2) x.heights[n] += s;
      };
      bump(plus, step);
      bump(minus, -step);
      return (average_power(plus, grid, dens, p).total - average_power(minus, grid, dens, p).total) / (2 * step);
    };
    for (std::size_t n = 0; n < d.size(); ++n) {
      const Vec2 fp{fd(n, 0), fd(n, 1)};
      const double fh = fd(n, 2);
      if (norm(fp) > 0.0) worst = std::max(worst, norm(g.position[n] - fp) / norm(fp));
      if (fh != 0.0) worst = std::max(worst, rel(g.height[n], fh));
      ++checked;
    }
  }
  return {worst < 1e-3, fmt("%g UAV gradients over 20 configurations, max rel error %.2e (tol 1e-3)", checked, worst)};
}

// ---------------------------------------------------------------- 5
Outcome moebius_boundary() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> pos(0.0, 1000.0), hgt(10.0, 200.0), kap(1.0, 4.0), alp(1.0, 4.0);
  double worst = 0.0;
  for (int pair = 0; pair < 100; ++pair) {
    const PowerParams p = params(alp(rng), kap(rng), 1.0);
    double hn = hgt(rng), hm = hgt(rng);
    while (std::abs(hn - hm) < 1e-3) hm = hgt(rng);
    const Deployment d{{{pos(rng), pos(rng)}, {pos(rng), pos(rng)}}, {hn, hm}};
    const DominanceRegion r = dominance_region(0, 1, d, p);
    if (r.kind == DominanceRegion::Kind::half_plane) return {false, "unequal heights gave a half-plane"};
    for (int k = 0; k < 64; ++k) {
      const double a = 2.0 * std::numbers::pi * k / 64.0;
      const Vec2 w = r.center + Vec2{r.radius * std::cos(a), r.radius * std::sin(a)};
      worst = std::max(worst, rel(tx_power(w, d.ground[0], hn, p), tx_power(w, d.ground[1], hm, p)));
    }
  }
  return {worst < 1e-9, fmt("6400 circle points, max rel power mismatch %.2e (tol 1e-9)", worst)};
}

// ---------------------------------------------------------------- 6
Outcome empty_cell() {
  const RegionRaster raster = RegionRaster::build(Polygon::rectangle({0, 0}, {1, 1}), 512);
  const Deployment d{{{0.1, 0.2}, {0.6, 0.6}}, {0.5, 2.3}};
  const std::vector<double> f = cell_area_fractions(assign_cells(d, raster, params(2.0, 1.0, 0.1)));
  return {f[1] <= 1e-3, fmt("UAV 2 owns %.4f%% of the grid (tol 0.1%%)", 100.0 * f[1])};
}

// ---------------------------------------------------------------- 7
Outcome monotone_feasible() {
  const Scene uniform = Scene::build(kSquareKm, DensityField::uniform(), 128);
  const Scene mixture = Scene::build(
      kSquareKm,
      DensityField::gaussian_mixture({{0.5, {300, 300}, 150}, {0.25, {600, 700}, 100}, {0.25, {750, 250}, 200}}), 128);
  const int sizes[] = {1, 2, 4, 8, 16, 32};
  int bad = 0, iterations = 0;
  for (int run = 0; run < 50; ++run) {
    const LloydVariant v = run % 2 ? LloydVariant::B : LloydVariant::A;
    const PowerParams p = params(2.0 + run % 3, 1.0 + (run / 3) % 2, run % 4 < 2 ? 25.0 : 50.0);
    const Scene &scene = run % 5 == 4 ? mixture : uniform;
    const RunReport r = optimize(random_deployment(sizes[run % 6], kSquareKm, 100.0, p.h_min, restart_seed(99, run)),
                                 LloydConfig::default_config(kSquareKm, v), scene, p);
    iterations += r.iterations;
    for (std::size_t i = 1; i < r.power_trace.size(); ++i) bad += r.power_trace[i] > r.power_trace[i - 1];
    for (double h : r.min_height_trace) bad += h < p.h_min;
    for (double h : r.final.heights) bad += h < p.h_min;
  }
  return {bad == 0, fmt("50 runs, %g iterations, %g violations", iterations, bad)};
}

// ---------------------------------------------------------------- 8
Outcome variant_closeness() {
  const Scene scene = Scene::build(kSquareKm, DensityField::uniform(), 256);
  const PowerParams p = params(2.0, 1.0, 25.0);
  std::string detail;
  bool pass = true;
  for (std::size_t n : {16u, 32u}) {
    double best[2];
    for (LloydVariant v : {LloydVariant::A, LloydVariant::B}) {
      LloydConfig c = LloydConfig::default_config(kSquareKm, v);
      c.stop_threshold = 1e-8;
      c.max_outer_iterations = 5000;
      best[v == LloydVariant::B] = multi_start(n, 20, 2023, c, scene, p, 100.0, 1).best.power_trace.back();
    }
    const double gap = std::abs(best[0] - best[1]) / best[1];
    pass = pass && gap < 0.005;
    detail += fmt("N=%g: A %.1f, B %.1f, gap %.3f%%; ", double(n), best[0], best[1], 100.0 * gap);
  }
  return {pass, detail + "tol 0.5%"};
}

// ---------------------------------------------------------------- 9
Outcome height_std_trend() {
  const Polygon square = Polygon::rectangle({0, 0}, {10, 10});
  const Scene scene = Scene::build(square, DensityField::uniform(), 256);
  const PowerParams p = params(2.0, 2.0, 0.1);
  const LloydConfig c = LloydConfig::default_config(square, LloydVariant::B);
  const double s8 = multi_start(8, 10, 8, c, scene, p, 1.0, 1).best.height_std;
  const double s32 = multi_start(32, 10, 32, c, scene, p, 1.0, 1).best.height_std;
  return {s32 < s8, fmt("height std N=8 %.4f m, N=32 %.4f m", s8, s32)};
}

// ---------------------------------------------------------------- 10
Outcome baseline_ordering() {
  const std::size_t n = 40;
  const int restarts = 10;
  const Scene scene = Scene::build(kSquareKm, DensityField::uniform(), 256);
  const PowerParams p = params(2.0, 1.0, 25.0);
  PowerParams eval = p, omni = p;
  eval.normalized = false;
  omni.kappa = 0.0;

  auto best = [&](LloydVariant v, const PowerParams &train) {
    return multi_start(n, restarts, 40, LloydConfig::default_config(kSquareKm, v), scene, train, 100.0, 1).best.final;
  };
  const double pb = cross_evaluate(best(LloydVariant::B, p), scene, eval).total;
  const double pa = cross_evaluate(best(LloydVariant::A, p), scene, eval).total;
  Deployment kss = best(LloydVariant::B, omni);
  for (double &h : kss.heights) h = std::max(h, p.h_min);
  const double pk = cross_evaluate(kss, scene, eval).total;

  // magnitude references: hexagonal cells of area A/N, UAV at the cell's
  // optimal height (Lloyd) or at h_min (omni antenna, height floor binding)
  const double H = kSquareKm.area() / n;
  const double h_opt = solve_common_height_numeric(p.gamma(), p.kappa, H).h_star;
  const double ref_opt = hexagon_average_power(p.gamma(), p.kappa, H, h_opt) / directivity(p.kappa);
  const double ref_floor = hexagon_average_power(p.gamma(), p.kappa, H, p.h_min) / directivity(p.kappa);

  const bool order = pb <= pa && pa <= pk;
  const bool bands = rel(pb, ref_opt) <= 0.15 && rel(pa, ref_opt) <= 0.15 && rel(pk, ref_floor) <= 0.15;
  return {order && bands,
          fmt("B %.1f <= A %.1f <= KSS %.1f; ", pb, pa, pk) +
              fmt("hexagon references %.1f (optimal height), %.1f (h_min); band 15%%", ref_opt, ref_floor)};
}

// ---------------------------------------------------------------- 11
Outcome hpbw_anchors() {
  const double h1 = hpbw_degrees(1.0), h2 = hpbw_degrees(2.0), d0 = directivity(0.0);
  return {h1 == 120.0 && h2 == 90.0 && d0 == 1.0, fmt("hpbw(1) = %.17g, hpbw(2) = %.17g, D0(0) = %.17g", h1, h2, d0)};
}

// ---------------------------------------------------------------- 12
Outcome power_formula_audit() {
  const double h = solve_common_height_closed(1, 1.0, 1.0).h_star;
  const double quad = hexagon_average_power(1.0, 1.0, 1.0, h);
  const double reference = std::sqrt(10.0 / (9.0 * kSqrt3));
  const double alternate = alternate_power_expression(1, 1.0, 1.0);
  const double derived = optimal_average_power(1, 1.0, 1.0, false);
  return {rel(quad, reference) < 1e-4,
          fmt("quadrature %.8f vs %.8f (rel %.1e, tol 1e-4); alternate/derived prefactor ratio %.6f", quad, reference,
              rel(quad, reference), alternate / derived)};
}

}  // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria{
      {1, "hexagon moments match their closed forms", 1, hexagon_moments},
      {2, "gamma = 1 height factor and brute-force search", 10, gamma_one_height},
      {3, "closed form, numeric root and brute force agree", 30, triple_agreement},
      {4, "analytic gradients match finite differences", 120, gradient_checks},
      {5, "dominance circles are equal-power curves", 5, moebius_boundary},
      {6, "low UAV empties the high UAV's cell", 1, empty_cell},
      {7, "Lloyd power traces monotone, heights feasible", 600, monotone_feasible},
      {8, "Lloyd-A and Lloyd-B within 0.5% (uniform)", 1200, variant_closeness},
      {9, "height spread shrinks from N=8 to N=32", 600, height_std_trend},
      {10, "Lloyd-B <= Lloyd-A <= KSS with magnitude bands", 1800, baseline_ordering},
      {11, "beamwidth and directivity anchors", 1, hpbw_anchors},
      {12, "single-cell power audit", 1, power_formula_audit},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion &c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s; %.2f s (budget %g s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
