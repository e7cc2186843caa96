// End-to-end acceptance suite.  Each numbered criterion prints one PASS or
// FAIL line; the process exits nonzero if any criterion fails.  Thresholds
// are exact identities, oracle comparisons, and fitted-rate bands; no
// unobservable constants appear.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hypspec/collar.hpp"
#include "hypspec/fncalculus.hpp"
#include "hypspec/qdiff.hpp"
#include "hypspec/quadrature.hpp"
#include "hypspec/reduced.hpp"
#include "hypspec/spectrum.hpp"
#include "hypspec/surface.hpp"

using namespace hypspec;

namespace {

constexpr double kPi = 3.14159265358979323846;

int failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

surface::MeshParams params(double h, int nt = 64) {
  surface::MeshParams p;
  p.h = h;
  p.n_theta = nt;
  p.delta_cut = 0.3;
  return p;
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------

void criterion1() {
  Check c;
  const double lstar = 2.0 * std::asinh(1.0);
  c.require(std::abs(collar::width(lstar) - lstar) < 1e-12 * lstar,
            "width(2 arsinh 1) = ell");
  c.require(std::abs(collar::half_length(lstar) - kPi * kPi / (2.0 * lstar)) <
                1e-12 * collar::half_length(lstar),
            "X(2 arsinh 1) = pi^2/(2 ell)");
  for (double ell : {0.05, 0.1, 0.5, 1.0}) {
    c.require(std::abs(collar::truncation_level(ell, collar::width(ell) / 2.0)) <
                  1e-10,
              "Z_{w/2} = 0");
    const double s2 = 0.9 * collar::half_length(ell);
    const double q_len = quadrature::integrate(
        [ell](double s) { return collar::conformal_factor(ell, s); }, -s2, s2);
    c.require(std::abs(q_len - 2.0 * collar::geodesic_distance(ell, s2)) < 1e-10,
              "quadrature(rho) = band width");
    const double q_area = quadrature::integrate(
        [ell](double s) {
          const double r = collar::conformal_factor(ell, s);
          return 2.0 * kPi * r * r;
        },
        -s2, s2);
    c.require(std::abs(q_area - collar::collar_area(ell, -s2, s2)) < 1e-10,
              "quadrature(2 pi rho^2) = area");
  }
  report(1, "closed-form collar identities", c.ok,
         c.ok ? "all identities within stated tolerances" : c.detail);
}

void criterion2() {
  Check c;
  std::vector<double> resid_band, principal_band;
  for (double ell : {0.4, 0.2, 0.1, 0.05, 0.025, 0.0125}) {
    const auto norms = qdiff::dz2_norms(ell);
    const double X = collar::half_length(ell);
    const double quad = quadrature::integrate(
        [ell](double s) {
          const double r = collar::conformal_factor(ell, s);
          return 2.0 * kPi * 4.0 / (r * r);
        },
        -X * (1.0 - 1e-13), X * (1.0 - 1e-13), 1e-11 * norms.l2_squared);
    c.require(std::abs(quad - norms.l2_squared) <= 1e-10 * norms.l2_squared,
              "L2 quadrature vs closed form");
    const double expansion =
        32.0 * std::pow(kPi, 5) / std::pow(ell, 3) - 16.0 * std::pow(kPi, 4) / 3.0;
    resid_band.push_back(std::abs(norms.l2_squared - expansion) / (ell * ell));
    principal_band.push_back(
        std::abs(qdiff::principal_theta_norm_sq(ell) - 32.0 * kPi / ell) /
        (ell * ell));
  }
  auto band = [](const std::vector<double>& v) {
    double lo = v[0], hi = v[0];
    for (double x : v) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    return hi / lo;
  };
  c.require(band(resid_band) < 4.0, "L2 expansion residual/ell^2 factor-4 band");
  c.require(band(principal_band) < 4.0,
            "principal norm residual/ell^2 factor-4 band");
  char buf[128];
  std::snprintf(buf, sizeof buf, "band ratios %.2f and %.2f (limit 4)",
                band(resid_band), band(principal_band));
  report(2, "quadratic-differential norms", c.ok, c.ok ? buf : c.detail);
}

void criterion3() {
  Check c;
  const double ctop = reduced::c_top({1, 1});
  auto rows =
      reduced::f_of_ell({1, 1}, {0.4, 0.2, 0.1, 0.05, 0.025, 0.0125}, 8192);
  double prev_err = 1e300, lo = 1e300, hi = 0.0;
  for (const auto& r : rows) {
    const double err = std::abs(r.sl_over_ell - ctop);
    c.require(err < prev_err, "error monotonically improving");
    prev_err = err;
    const double scaled = err / (r.ell * std::abs(std::log(r.ell)));
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  const double final_rel = std::abs(rows.back().sl_over_ell - ctop) / ctop;
  c.require(final_rel <= 0.05, "final relative error <= 5%");
  c.require(hi / lo < 5.0, "e(ell)/(ell |log ell|) factor-5 band");
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "final error %.2f%%, rate band ratio %.2f (limit 5)",
                100.0 * final_rel, hi / lo);
  report(3, "reduced model converges to C_top", c.ok, c.ok ? buf : c.detail);
}

void criterion4() {
  Check c;
  const double ell = 0.5;
  const double smax = 0.8 * collar::half_length(ell);
  const auto oracle = spectrum::oracle_cylinder(ell, smax, 8, 4000);

  auto solve = [&](double h) {
    auto cyl = surface::build_cylinder_mesh(ell, smax, params(h));
    auto sys = spectrum::assemble(cyl.mesh);
    std::vector<int> bdofs;
    for (int v : cyl.boundary_vertices) bdofs.push_back(cyl.mesh.vertex_dof[v]);
    auto dir = spectrum::restrict_dirichlet(sys, bdofs);
    spectrum::SolveOptions opts;
    opts.k = 5;
    opts.shift_hint = oracle[0];
    return spectrum::solve_lowest(dir.sys, opts).values;
  };
  const auto coarse = solve(0.1);
  const auto fine = solve(0.05);

  double worst_rel = 0.0, worst_order = 2.0;
  for (int i = 0; i < 5; ++i) {
    const double richardson = (4.0 * fine[i] - coarse[i]) / 3.0;
    worst_rel = std::max(worst_rel, std::abs(richardson / oracle[i] - 1.0));
    const double order =
        std::log2((coarse[i] - oracle[i]) / (fine[i] - oracle[i]));
    if (std::abs(order - 2.0) > std::abs(worst_order - 2.0)) worst_order = order;
  }
  c.require(worst_rel < 0.01, "Richardson value within 1% of oracle");
  c.require(std::abs(worst_order - 2.0) <= 0.3, "convergence order 2.0 +- 0.3");
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "worst Richardson error %.3f%%, worst order %.2f", 100.0 * worst_rel,
                worst_order);
  report(4, "Dirichlet collar vs separated 1D oracle", c.ok, c.ok ? buf : c.detail);
}

void criterion5(spectrum::EigenResult* out_result,
                surface::SurfaceMesh* out_mesh) {
  Check c;
  auto mesh = surface::build_mesh(surface::genus2_config(0.2, 1.0), params(0.05));
  auto sys = spectrum::assemble(mesh);
  const double area = spectrum::total_mass(sys.mass);
  const double sl = reduced::sl_lambda(reduced::make_sl_model({1, 1}, 0.2));
  spectrum::SolveOptions opts;
  opts.k = 4;
  opts.shift_hint = sl;
  auto res = spectrum::solve_lowest(sys, opts);

  c.require(std::abs(res.values[0]) <= 1e-8 * res.values[1],
            "lambda_0 numerically zero");
  c.require(std::abs(area - 4.0 * kPi) < 1e-3 * 4.0 * kPi, "area within 0.1% of 4 pi");
  c.require(std::abs(res.values[1] / sl - 1.0) < 0.10,
            "lambda_1 within 10% of the SL model");
  c.require(res.values[2] / res.values[1] >= 3.0, "spectral gap lambda_2/lambda_1 >= 3");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "lambda_1 = %.6f (SL %.6f, gap %.4f%%), area error %.4f%%, "
                "lambda_2/lambda_1 = %.1f",
                res.values[1], sl, 100.0 * std::abs(res.values[1] / sl - 1.0),
                100.0 * std::abs(area / (4.0 * kPi) - 1.0),
                res.values[2] / res.values[1]);
  report(5, "genus-2 closed-surface solve", c.ok, c.ok ? buf : c.detail);
  *out_result = std::move(res);
  *out_mesh = std::move(mesh);
}

void criterion6() {
  Check c;
  // SL backend sweep
  fncalculus::BackendSpec sl;
  sl.backend = fncalculus::Backend::kSl;
  auto rep = fncalculus::rate_experiment_fn(surface::genus2_config(0.2, 1.0),
                                            {0.2, 0.1, 0.05, 0.025}, sl);
  double lo = 1e300, hi = 0.0, ratio_005 = 0.0;
  for (const auto& r : rep.rows) {
    lo = std::min(lo, r.r1_normalized);
    hi = std::max(hi, r.r1_normalized);
    if (r.ell1 == 0.05) ratio_005 = r.dlam_dell1 * r.ell1 / r.lambda;
  }
  c.require(ratio_005 >= 0.9 && ratio_005 <= 1.1,
            "SL dlambda/dell1 * ell1/lambda in [0.9, 1.1] at ell1 = 0.05");
  c.require(hi / lo < 5.0, "SL r1/(ell1 |log ell1|) factor-5 band");

  // FEM backend at ell1 in {0.2, 0.1}
  fncalculus::BackendSpec fem;
  fem.backend = fncalculus::Backend::kFem;
  fem.mesh = params(0.1);
  auto repf = fncalculus::rate_experiment_fn(surface::genus2_config(0.2, 1.0),
                                             {0.2, 0.1}, fem);
  c.require(std::abs(repf.rows[0].dlam_dell_other) <=
                0.2 * std::abs(repf.rows[0].dlam_dell1),
            "far-length derivative small at 0.2");
  c.require(std::abs(repf.rows[1].dlam_dell_other) <=
                0.2 * std::abs(repf.rows[1].dlam_dell1),
            "far-length derivative small at 0.1");
  c.require(std::abs(repf.rows[1].dlam_dell_other) <
                std::abs(repf.rows[0].dlam_dell_other),
            "far-length derivative decreasing in ell1");

  // twist sensitivity vs mesh-noise floor: the floor is the lambda_1 shift
  // under one refinement step at the same configuration
  fncalculus::BackendSpec fine = fem;
  fine.mesh = params(0.05);
  const double noise_floor =
      std::abs(fncalculus::lambda1(surface::genus2_config(0.2, 1.0), fem) -
               fncalculus::lambda1(surface::genus2_config(0.2, 1.0), fine));
  c.require(repf.rows[0].twist_delta <= noise_floor,
            "one-quantum twist shift below the mesh-noise floor");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "SL ratio %.4f, band %.2f; far-derivative ratios %.4f/%.4f; "
                "twist shift %.1e vs floor %.1e",
                ratio_005, hi / lo,
                std::abs(repf.rows[0].dlam_dell_other / repf.rows[0].dlam_dell1),
                std::abs(repf.rows[1].dlam_dell_other / repf.rows[1].dlam_dell1),
                repf.rows[0].twist_delta, noise_floor);
  report(6, "Fenchel-Nielsen derivative rates", c.ok, c.ok ? buf : c.detail);
}

void criterion7() {
  Check c;
  auto rows =
      fncalculus::sharpness_experiment({0.2, 0.1, 0.05}, 0.5, 1.0, 1.0, params(0.1));
  double lo = 1e300, hi = 0.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    lo = std::min(lo, rows[i].difference_over_sq);
    hi = std::max(hi, rows[i].difference_over_sq);
    if (i > 0)
      c.require(rows[i].difference < rows[i - 1].difference,
                "two-pinch difference decreasing");
  }
  c.require(hi / lo < 3.0, "D/ell1^2 factor-3 band");
  c.require(lo > 1e-4, "D/ell1^2 bounded away from zero");
  char buf[128];
  std::snprintf(buf, sizeof buf, "D/ell1^2 in [%.5f, %.5f], band ratio %.2f",
                lo, hi, hi / lo);
  report(7, "genus-3 second-order sharpness", c.ok, c.ok ? buf : c.detail);
}

void criterion8(const spectrum::EigenResult& res,
                const surface::SurfaceMesh& mesh) {
  Check c;
  // angular energy decay toward the collar center, middle half of the collar
  auto prof = spectrum::angular_energy(res, mesh, 0, 1);
  const double X = prof.s.back();
  std::vector<double> xs, ys;
  for (size_t i = 0; i < prof.s.size(); ++i) {
    const double a = std::abs(prof.s[i]);
    if (a < 0.25 * X || a > 0.75 * X) continue;
    if (!(prof.theta_energy[i] > 0.0)) continue;
    xs.push_back(a);  // distance from the collar center
    ys.push_back(std::log(prof.theta_energy[i]));
  }
  // theta-energy grows away from the center, so log theta(s) against the
  // distance-to-center must rise at >= 0.8 per unit (slope toward the
  // center <= -0.8)
  const double slope = fitted_slope(xs, ys);
  c.require(slope >= 0.8, "log angular energy slope toward center <= -0.8");

  // thick-part Dirichlet energy over lambda_1^2, stable under refinement
  const double thick_fine = spectrum::thick_energy(res, mesh, 0.3, 1) /
                            (res.values[1] * res.values[1]);
  auto mesh_c = surface::build_mesh(surface::genus2_config(0.2, 1.0), params(0.1));
  auto sys_c = spectrum::assemble(mesh_c);
  spectrum::SolveOptions opts;
  opts.k = 4;
  opts.shift_hint = res.values[1];
  auto res_c = spectrum::solve_lowest(sys_c, opts);
  const double thick_coarse = spectrum::thick_energy(res_c, mesh_c, 0.3, 1) /
                              (res_c.values[1] * res_c.values[1]);
  const double ratio = thick_fine / thick_coarse;
  c.require(ratio > 0.5 && ratio < 2.0,
            "thick_energy/lambda_1^2 stable across refinement");
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "decay slope %.2f (need >= 0.8); thick/lambda^2 %.3f vs %.3f",
                slope, thick_fine, thick_coarse);
  report(8, "eigenfunction diagnostics", c.ok, c.ok ? buf : c.detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  spectrum::EigenResult genus2_result;
  surface::SurfaceMesh genus2_mesh;
  criterion5(&genus2_result, &genus2_mesh);
  criterion6();
  criterion7();
  criterion8(genus2_result, genus2_mesh);
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
