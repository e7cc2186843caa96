// Batch experiment runner.  Subcommands mirror the library modules:
//   validate         closed-form identity suite (or config structure checks)
//   ctop             reduced-model sweep of lambda_1/ell against C_top
//   solve            FEM eigensolve of a configured surface
//   deriv            Fenchel-Nielsen derivative sweep
//   c0               same-ell1 comparison across different far coordinates
//   sharpness        genus-3 two-pinch second-order difference
//   cylinder-oracle  FEM vs separated 1D oracle on a Dirichlet collar
// Exit codes: 0 ok, 1 assertion failure, 2 config error, 3 solver failure.

#include <atomic>
#include <cmath>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hypspec/collar.hpp"
#include "hypspec/fncalculus.hpp"
#include "hypspec/io.hpp"
#include "hypspec/qdiff.hpp"
#include "hypspec/quadrature.hpp"
#include "hypspec/reduced.hpp"
#include "hypspec/spectrum.hpp"
#include "hypspec/surface.hpp"

namespace {

using namespace hypspec;

constexpr double kPi = 3.14159265358979323846;

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out_dir = ".";
  std::uint64_t seed = 42;
  int workers = 1;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw AssertionFailure(what);
}

// Evaluate f on every index with a bounded pool; results land in order.
template <typename F>
void parallel_for(int n, int workers, F&& f) {
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string out_path(const Globals& g, const std::string& name) {
  return g.out_dir + "/" + name;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& config_path) {
  if (!config_path.empty()) {
    const io::SurfaceConfig cfg = io::read_surface_config(config_path);
    const surface::Diagnostics d = surface::validate(cfg.fn);
    for (const auto& m : d.messages) std::cout << m << "\n";
    require(d.ok, "surface configuration invalid");
    std::cout << "configuration valid (genus " << cfg.fn.graph.genus() << ")\n";
    return 0;
  }
  // closed-form identity suite
  const double lstar = 2.0 * std::asinh(1.0);
  require(std::abs(collar::width(lstar) - lstar) < 1e-12 * lstar,
          "width(2 arsinh 1) != ell");
  require(std::abs(collar::half_length(lstar) - kPi * kPi / (2.0 * lstar)) <
              1e-12 * collar::half_length(lstar),
          "X(2 arsinh 1) != pi^2 / (2 ell)");
  for (double ell : {0.05, 0.1, 0.5, 1.0}) {
    const double w = collar::width(ell);
    require(std::abs(collar::truncation_level(ell, w / 2.0)) < 1e-10,
            "Z_{w/2} != 0");
    const double X = collar::half_length(ell);
    const double s2 = 0.9 * X;
    const double q_len = quadrature::integrate(
        [ell](double s) { return collar::conformal_factor(ell, s); }, -s2, s2);
    require(std::abs(q_len - 2.0 * collar::geodesic_distance(ell, s2)) < 1e-10,
            "quadrature(rho) != width of band");
    const double q_area = quadrature::integrate(
        [ell](double s) {
          const double r = collar::conformal_factor(ell, s);
          return 2.0 * kPi * r * r;
        },
        -s2, s2);
    require(std::abs(q_area - collar::collar_area(ell, -s2, s2)) < 1e-10,
            "quadrature(2 pi rho^2) != collar area");
    const auto norms = qdiff::dz2_norms(ell);
    const double q_l2 = quadrature::integrate(
        [ell](double s) {
          const double r = collar::conformal_factor(ell, s);
          return 2.0 * kPi * 4.0 / (r * r);
        },
        -X * (1.0 - 1e-13), X * (1.0 - 1e-13), 1e-11 * norms.l2_squared);
    require(std::abs(q_l2 - norms.l2_squared) < 1e-10 * norms.l2_squared,
            "dz2 L2 quadrature vs closed form");
  }
  std::cout << "identity suite passed\n";
  return 0;
}

int cmd_ctop(const Globals& g, int gp, int gm, std::vector<double> ells,
             int grid) {
  const reduced::SplitTopology top{gp, gm};
  const double ctop = reduced::c_top(top);
  std::ostringstream cfg;
  cfg << "gp=" << gp << " gm=" << gm << " grid=" << grid << " ells=";
  for (double e : ells) cfg << e << ',';
  io::CsvTable csv("ctop", cfg.str(),
                   {"ell", "sl_lambda", "sl_over_ell", "graph_over_ell"});
  std::vector<reduced::FRow> rows(ells.size());
  parallel_for(static_cast<int>(ells.size()), g.workers, [&](int i) {
    const auto r = reduced::f_of_ell(top, {ells[i]}, grid);
    rows[i] = r[0];
  });
  io::Series s1{"sl_lambda/ell", {}, {}}, s2{"c_top", {}, {}};
  for (const auto& r : rows) {
    csv.add_row({r.ell, r.sl, r.sl_over_ell, r.graph_over_ell});
    s1.x.push_back(r.ell);
    s1.y.push_back(r.sl_over_ell);
    s2.x.push_back(r.ell);
    s2.y.push_back(ctop);
  }
  csv.write(out_path(g, "ctop.csv"));
  io::write_svg_plot(out_path(g, "ctop.svg"), "lambda_1/ell vs C_top", {s1, s2},
                     true, false);
  require(std::abs(rows.back().sl_over_ell - ctop) <= 0.05 * ctop,
          "final sweep row not within 5% of C_top");
  return 0;
}

int cmd_solve(const Globals& g, const std::string& config_path, double h,
              int n_theta, double delta_cut, int k) {
  io::SurfaceConfig cfg = io::read_surface_config(config_path);
  if (h > 0.0) cfg.mesh.h = h;
  if (n_theta > 0) cfg.mesh.n_theta = n_theta;
  if (delta_cut > 0.0) cfg.mesh.delta_cut = delta_cut;

  const surface::SurfaceMesh mesh = surface::build_mesh(cfg.fn, cfg.mesh);
  const spectrum::AssembledSystem sys = spectrum::assemble(mesh);
  const double area = spectrum::total_mass(sys.mass);

  spectrum::SolveOptions opts;
  opts.k = k;
  opts.seed = g.seed;
  double min_ell = cfg.fn.lengths[0];
  for (double l : cfg.fn.lengths) min_ell = std::min(min_ell, l);
  opts.shift_hint = reduced::graph_lambda({1, cfg.fn.graph.genus() - 1}, min_ell);
  const spectrum::EigenResult res = spectrum::solve_lowest(sys, opts);

  std::vector<std::string> cols{"genus", "dofs", "area"};
  std::vector<double> row{static_cast<double>(mesh.genus),
                          static_cast<double>(mesh.n_dofs), area};
  for (int i = 0; i < k; ++i) {
    cols.push_back("lambda" + std::to_string(i));
    row.push_back(res.values[i]);
  }
  io::CsvTable csv("solve", io::write_surface_config(cfg), cols);
  csv.add_row(row);
  csv.write(out_path(g, "solve.csv"));

  const double expected_area = 4.0 * kPi * (mesh.genus - 1);
  require(std::abs(res.values[0]) <= 1e-8 * res.values[1],
          "lambda_0 not numerically zero");
  require(res.values[1] > 0.0, "lambda_1 not positive");
  require(std::abs(area - expected_area) < 0.01 * expected_area,
          "area deviates from 4 pi (genus - 1)");
  std::cout << "lambda_1 = " << res.values[1] << ", area = " << area << "\n";
  return 0;
}

fncalculus::Backend parse_backend(const std::string& name) {
  if (name == "fem") return fncalculus::Backend::kFem;
  if (name == "sl") return fncalculus::Backend::kSl;
  if (name == "graph") return fncalculus::Backend::kGraph;
  throw ConfigError("unknown backend '" + name + "'");
}

int cmd_deriv(const Globals& g, const std::string& config_path,
              const std::string& backend_name, std::vector<double> ells,
              double h, int n_theta) {
  fncalculus::BackendSpec be;
  be.backend = parse_backend(backend_name);
  be.mesh.h = h;
  be.mesh.n_theta = n_theta;
  be.seed = g.seed;
  surface::FNCoordinates base = config_path.empty()
                                    ? surface::genus2_config(ells.front(), 1.0)
                                    : io::read_surface_config(config_path).fn;

  const auto report = fncalculus::rate_experiment_fn(base, ells, be);
  std::ostringstream cfg;
  cfg << "backend=" << backend_name << " h=" << h << " n_theta=" << n_theta;
  io::CsvTable csv("deriv", cfg.str(),
                   {"ell1", "lambda", "dlam_dell1", "r1", "r1_normalized",
                    "dlam_dell_other", "twist_delta"});
  io::Series s{"r1/(ell |log ell|)", {}, {}};
  for (const auto& r : report.rows) {
    csv.add_row({r.ell1, r.lambda, r.dlam_dell1, r.r1, r.r1_normalized,
                 r.dlam_dell_other, r.twist_delta});
    s.x.push_back(r.ell1);
    s.y.push_back(r.r1_normalized);
  }
  csv.write(out_path(g, "deriv.csv"));
  io::write_svg_plot(out_path(g, "deriv.svg"), "normalized first-length residual",
                     {s}, true, false);
  for (const auto& r : report.rows)
    require(r.dlam_dell1 > 0.0, "dlambda/dell1 not positive");
  return 0;
}

int cmd_c0(const Globals& g, std::vector<double> ells, double other_a,
           double other_b, double h, int n_theta) {
  fncalculus::BackendSpec be;
  be.backend = fncalculus::Backend::kFem;
  be.mesh.h = h;
  be.mesh.n_theta = n_theta;
  be.seed = g.seed;
  std::vector<fncalculus::C0Row> rows(ells.size());
  parallel_for(static_cast<int>(ells.size()), g.workers, [&](int i) {
    rows[i] = fncalculus::c0_comparison({ells[i]}, other_a, other_b, be)[0];
  });
  std::ostringstream cfg;
  cfg << "other_a=" << other_a << " other_b=" << other_b << " h=" << h;
  io::CsvTable csv("c0", cfg.str(),
                   {"ell1", "lambda_a", "lambda_b", "diff", "diff_over_ell1sq",
                    "reduced", "rel_gap_reduced"});
  io::Series s{"diff/ell1^2", {}, {}};
  for (const auto& r : rows) {
    csv.add_row({r.ell1, r.lambda_a, r.lambda_b, r.diff, r.diff_over_sq,
                 r.reduced_value, r.rel_gap_reduced});
    s.x.push_back(r.ell1);
    s.y.push_back(r.diff_over_sq);
  }
  csv.write(out_path(g, "c0.csv"));
  io::write_svg_plot(out_path(g, "c0.svg"), "|lambda - lambda~| / ell1^2", {s},
                     true, false);
  return 0;
}

int cmd_sharpness(const Globals& g, std::vector<double> ells, double ell2a,
                  double ell2b, double other, double h, int n_theta) {
  surface::MeshParams mp;
  mp.h = h;
  mp.n_theta = n_theta;
  std::vector<fncalculus::SharpnessRow> rows(ells.size());
  parallel_for(static_cast<int>(ells.size()), g.workers, [&](int i) {
    rows[i] = fncalculus::sharpness_experiment({ells[i]}, ell2a, ell2b, other, mp)[0];
  });
  std::ostringstream cfg;
  cfg << "ell2a=" << ell2a << " ell2b=" << ell2b << " other=" << other
      << " h=" << h;
  io::CsvTable csv("sharpness", cfg.str(),
                   {"ell1", "lambda_a", "lambda_b", "difference",
                    "difference_over_ell1sq"});
  io::Series s{"D/ell1^2", {}, {}};
  for (const auto& r : rows) {
    csv.add_row({r.ell1, r.lambda_a, r.lambda_b, r.difference,
                 r.difference_over_sq});
    s.x.push_back(r.ell1);
    s.y.push_back(r.difference_over_sq);
  }
  csv.write(out_path(g, "sharpness.csv"));
  io::write_svg_plot(out_path(g, "sharpness.svg"), "two-pinch difference",
                     {s}, true, false);
  for (const auto& r : rows)
    require(r.difference > 0.0, "two-pinch difference vanished");
  return 0;
}

int cmd_cylinder_oracle(const Globals& g, double ell, double smax_frac,
                        int modes, int grid, double h, int n_theta) {
  const double smax = smax_frac * collar::half_length(ell);
  const auto oracle = spectrum::oracle_cylinder(ell, smax, modes, grid);

  surface::MeshParams mp;
  mp.h = h;
  mp.n_theta = n_theta;
  const surface::CylinderMesh cyl = surface::build_cylinder_mesh(ell, smax, mp);
  const spectrum::AssembledSystem sys = spectrum::assemble(cyl.mesh);
  std::vector<int> bdofs;
  for (int v : cyl.boundary_vertices) bdofs.push_back(cyl.mesh.vertex_dof[v]);
  const auto dir = spectrum::restrict_dirichlet(sys, bdofs);
  spectrum::SolveOptions opts;
  opts.k = 5;
  opts.seed = g.seed;
  opts.shift_hint = oracle[0];
  const auto res = spectrum::solve_lowest(dir.sys, opts);

  std::ostringstream cfg;
  cfg << "ell=" << ell << " smax_frac=" << smax_frac << " grid=" << grid
      << " h=" << h;
  io::CsvTable csv("cylinder-oracle", cfg.str(),
                   {"index", "fem", "oracle", "rel_error"});
  for (int i = 0; i < 5; ++i)
    csv.add_row({static_cast<double>(i), res.values[i], oracle[i],
                 res.values[i] / oracle[i] - 1.0});
  csv.write(out_path(g, "cylinder-oracle.csv"));
  for (int i = 0; i < 5; ++i)
    require(std::abs(res.values[i] / oracle[i] - 1.0) < 0.05,
            "FEM eigenvalue strays from the 1D oracle");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for first eigenvalues of pinched hyperbolic surfaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out_dir, "output directory for CSV/SVG artifacts");
  app.add_option("--seed", g.seed, "eigensolver seed");
  app.add_option("--workers", g.workers, "worker pool size for sweeps");

  std::string config_path, backend = "sl";
  std::vector<double> ells{0.4, 0.2, 0.1, 0.05, 0.025, 0.0125};
  int gp = 1, gm = 1, grid = 8192, n_theta = 64, k = 6, modes = 8;
  double h = 0.1, delta_cut = -1.0, other_a = 1.0, other_b = 0.8;
  double ell = 0.5, smax_frac = 0.8, ell2a = 0.5, ell2b = 1.0, other = 1.0;

  auto* validate = app.add_subcommand("validate", "closed-form identity suite or config check");
  validate->add_option("--config", config_path, "surface config JSON");

  auto* ctop = app.add_subcommand("ctop", "reduced-model sweep toward C_top");
  ctop->add_option("--gp", gp);
  ctop->add_option("--gm", gm);
  ctop->add_option("--ells", ells)->delimiter(',');
  ctop->add_option("--grid", grid);

  auto* solve = app.add_subcommand("solve", "FEM eigensolve of a configured surface");
  solve->add_option("--config", config_path)->required();
  solve->add_option("--mesh-h", h);
  solve->add_option("--ntheta", n_theta);
  solve->add_option("--delta-cut", delta_cut);
  solve->add_option("--k", k);

  auto* deriv = app.add_subcommand("deriv", "Fenchel-Nielsen derivative sweep");
  deriv->add_option("--config", config_path);
  deriv->add_option("--backend", backend);
  deriv->add_option("--ells", ells)->delimiter(',');
  deriv->add_option("--mesh-h", h);
  deriv->add_option("--ntheta", n_theta);

  auto* c0 = app.add_subcommand("c0", "same-ell1 comparison across far coordinates");
  c0->add_option("--ells", ells)->delimiter(',');
  c0->add_option("--other-a", other_a);
  c0->add_option("--other-b", other_b);
  c0->add_option("--mesh-h", h);
  c0->add_option("--ntheta", n_theta);

  auto* sharp = app.add_subcommand("sharpness", "genus-3 two-pinch difference");
  sharp->add_option("--ells", ells)->delimiter(',');
  sharp->add_option("--ell2a", ell2a);
  sharp->add_option("--ell2b", ell2b);
  sharp->add_option("--other", other);
  sharp->add_option("--mesh-h", h);
  sharp->add_option("--ntheta", n_theta);

  auto* cyl = app.add_subcommand("cylinder-oracle", "FEM vs separated 1D oracle");
  cyl->add_option("--ell", ell);
  cyl->add_option("--smax-frac", smax_frac);
  cyl->add_option("--modes", modes);
  cyl->add_option("--grid", grid);
  cyl->add_option("--mesh-h", h);
  cyl->add_option("--ntheta", n_theta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "{\"error\":\"config\",\"message\":\"" << e.what() << "\"}\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(g, config_path);
    if (*ctop) return cmd_ctop(g, gp, gm, ells, grid);
    if (*solve) return cmd_solve(g, config_path, h, n_theta, delta_cut, k);
    if (*deriv) return cmd_deriv(g, config_path, backend, ells, h, n_theta);
    if (*c0) return cmd_c0(g, ells, other_a, other_b, h, n_theta);
    if (*sharp) return cmd_sharpness(g, ells, ell2a, ell2b, other, h, n_theta);
    if (*cyl) return cmd_cylinder_oracle(g, ell, smax_frac, modes, grid, h, n_theta);
  } catch (const AssertionFailure& e) {
    std::cerr << "{\"error\":\"assertion\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "{\"error\":\"config\",\"message\":\"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "{\"error\":\"config\",\"message\":\"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"solver\",\"message\":\"" << e.what() << "\"}\n";
    return 3;
  }
  return 0;
}
