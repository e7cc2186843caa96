#include "hypspec/fncalculus.hpp"

#include <cmath>
#include <stdexcept>

#include "hypspec/spectrum.hpp"

namespace hypspec::fncalculus {

namespace {

constexpr double kPi = 3.14159265358979323846;

double fem_lambda1(const surface::FNCoordinates& fn, const BackendSpec& be) {
  const surface::SurfaceMesh mesh = surface::build_mesh(fn, be.mesh);
  const spectrum::AssembledSystem sys = spectrum::assemble(mesh);
  spectrum::SolveOptions opts;
  opts.k = 3;
  opts.tol = be.tol;
  opts.seed = be.seed;
  opts.shift_hint =
      reduced::graph_lambda(be.top, fn.lengths[be.pinch_curve]);
  return spectrum::solve_lowest(sys, opts).values[1];
}

}  // namespace

double lambda1(const surface::FNCoordinates& fn, const BackendSpec& be) {
  const double ell = fn.lengths.at(be.pinch_curve);
  switch (be.backend) {
    case Backend::kGraph:
      return reduced::graph_lambda(be.top, ell);
    case Backend::kSl:
      return reduced::sl_lambda(reduced::make_sl_model(be.top, ell, be.sl_grid));
    case Backend::kFem:
      return fem_lambda1(fn, be);
  }
  throw std::logic_error("fncalculus: unknown backend");
}

Derivative fd_of_function(const std::function<double(double)>& f, double x,
                          double h, Scheme scheme) {
  if (!(h > 0.0)) throw std::invalid_argument("fncalculus: step must be positive");
  auto central = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  Derivative out;
  if (scheme == Scheme::kRichardson) {
    out.value = (4.0 * d2 - d1) / 3.0;
    out.error_estimate = std::abs(d2 - d1) / 3.0;
  } else {
    out.value = d1;
    out.error_estimate = std::abs(d2 - d1);
  }
  return out;
}

Derivative fd_derivative(const DerivativeRequest& req) {
  const BackendSpec& be = req.backend;

  if (req.kind == CoordKind::kTwist) {
    // reduced models carry no twist dependence
    if (be.backend != Backend::kFem) return {0.0, 0.0};
    const double quantum = 2.0 * kPi / be.mesh.n_theta;
    double h = req.step > 0.0 ? req.step : quantum;
    h = std::max(quantum, quantum * std::round(h / quantum));
    auto f = [&](double psi) {
      surface::FNCoordinates fn = req.base;
      fn.twists.at(req.index) = psi;
      return fem_lambda1(fn, be);
    };
    // one-quantum steps only: halving h would leave the lattice
    const double base_psi = req.base.twists.at(req.index);
    const double d = (f(base_psi + h) - f(base_psi - h)) / (2.0 * h);
    return {d, std::abs(d)};
  }

  const double base_val = req.base.lengths.at(req.index);
  double h = req.step > 0.0 ? req.step : std::max(1e-3, 0.05 * base_val);
  if (!(base_val - h > 0.0))
    throw std::invalid_argument("fncalculus: step would make a length nonpositive");
  auto f = [&](double v) {
    surface::FNCoordinates fn = req.base;
    fn.lengths.at(req.index) = v;
    return lambda1(fn, be);
  };
  return fd_of_function(f, base_val, h, req.scheme);
}

ExperimentReport rate_experiment_fn(const surface::FNCoordinates& base,
                                    const std::vector<double>& ell1_list,
                                    const BackendSpec& backend,
                                    int other_index) {
  for (size_t i = 1; i < ell1_list.size(); ++i)
    if (!(ell1_list[i] < ell1_list[i - 1]))
      throw std::invalid_argument("fncalculus: ell1 list must be descending");

  ExperimentReport report;
  for (double ell1 : ell1_list) {
    surface::FNCoordinates fn = base;
    fn.lengths.at(backend.pinch_curve) = ell1;

    RateRow row;
    row.ell1 = ell1;
    row.lambda = lambda1(fn, backend);

    DerivativeRequest dreq;
    dreq.base = fn;
    dreq.kind = CoordKind::kLength;
    dreq.index = backend.pinch_curve;
    dreq.scheme = Scheme::kCentral;
    dreq.backend = backend;
    row.dlam_dell1 = fd_derivative(dreq).value;
    row.r1 = std::abs(row.dlam_dell1 - row.lambda / ell1);
    row.r1_normalized = row.r1 / (ell1 * std::abs(std::log(ell1)));

    if (backend.backend == Backend::kFem) {
      dreq.index = other_index;
      row.dlam_dell_other = fd_derivative(dreq).value;

      surface::FNCoordinates twisted = fn;
      twisted.twists.at(backend.pinch_curve) = 2.0 * kPi / backend.mesh.n_theta;
      row.twist_delta = std::abs(lambda1(twisted, backend) - row.lambda);
    }
    report.rows.push_back(row);
  }

  if (backend.backend == Backend::kFem && report.rows.size() >= 2) {
    // log-log slope of |dlam/dell_other| against ell1 (least squares)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& r : report.rows) {
      if (!(std::abs(r.dlam_dell_other) > 0.0)) continue;
      const double lx = std::log(r.ell1), ly = std::log(std::abs(r.dlam_dell_other));
      sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly; ++n;
    }
    if (n >= 2) report.slope_other = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return report;
}

std::vector<C0Row> c0_comparison(const std::vector<double>& ell1_list,
                                 double other_a, double other_b,
                                 const BackendSpec& fem_backend) {
  std::vector<C0Row> rows;
  for (double ell1 : ell1_list) {
    C0Row row;
    row.ell1 = ell1;
    row.lambda_a = lambda1(surface::genus2_config(ell1, other_a), fem_backend);
    row.lambda_b = lambda1(surface::genus2_config(ell1, other_b), fem_backend);
    row.diff = std::abs(row.lambda_a - row.lambda_b);
    row.diff_over_sq = row.diff / (ell1 * ell1);
    row.reduced_value =
        reduced::sl_lambda(reduced::make_sl_model(fem_backend.top, ell1, fem_backend.sl_grid));
    row.rel_gap_reduced = std::abs(row.lambda_a - row.reduced_value) / row.lambda_a;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SharpnessRow> sharpness_experiment(
    const std::vector<double>& ell1_list, double ell2_a, double ell2_b,
    double other_len, const surface::MeshParams& mesh_params) {
  BackendSpec be;
  be.backend = Backend::kFem;
  be.mesh = mesh_params;
  be.pinch_curve = 0;
  be.top = {1, 2};  // the first disconnecting curve splits genus 1 from genus 2
  std::vector<SharpnessRow> rows;
  for (double ell1 : ell1_list) {
    SharpnessRow row;
    row.ell1 = ell1;
    row.lambda_a = lambda1(surface::genus3_chain_config(ell1, ell2_a, other_len), be);
    row.lambda_b = lambda1(surface::genus3_chain_config(ell1, ell2_b, other_len), be);
    row.difference = std::abs(row.lambda_a - row.lambda_b);
    row.difference_over_sq = row.difference / (ell1 * ell1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hypspec::fncalculus
