// Python bindings for the main operations: collar closed forms, reduced
// models, hexagon solving, surface meshing, and the FEM eigensolver.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypspec/collar.hpp"
#include "hypspec/fncalculus.hpp"
#include "hypspec/hexagon.hpp"
#include "hypspec/io.hpp"
#include "hypspec/qdiff.hpp"
#include "hypspec/reduced.hpp"
#include "hypspec/spectrum.hpp"
#include "hypspec/surface.hpp"

namespace py = pybind11;
using namespace hypspec;

namespace {

surface::MeshParams make_params(double h, int n_theta, double delta_cut) {
  surface::MeshParams p;
  p.h = h;
  p.n_theta = n_theta;
  p.delta_cut = delta_cut;
  return p;
}

py::dict solve_config(const std::string& config_json, int k,
                      std::uint64_t seed) {
  const io::SurfaceConfig cfg = io::parse_surface_config(config_json);
  const surface::SurfaceMesh mesh = surface::build_mesh(cfg.fn, cfg.mesh);
  const spectrum::AssembledSystem sys = spectrum::assemble(mesh);
  spectrum::SolveOptions opts;
  opts.k = k;
  opts.seed = seed;
  double min_ell = cfg.fn.lengths[0];
  for (double l : cfg.fn.lengths) min_ell = std::min(min_ell, l);
  opts.shift_hint = reduced::graph_lambda({1, cfg.fn.graph.genus() - 1}, min_ell);
  const spectrum::EigenResult res = spectrum::solve_lowest(sys, opts);
  py::dict out;
  out["genus"] = mesh.genus;
  out["dofs"] = mesh.n_dofs;
  out["area"] = spectrum::total_mass(sys.mass);
  out["values"] = res.values;
  out["residuals"] = res.residuals;
  out["iterations"] = res.iterations;
  return out;
}

}  // namespace

PYBIND11_MODULE(_hypspec, m) {
  m.doc() = "first Laplace eigenvalues of pinched hyperbolic surfaces";

  auto collar_m = m.def_submodule("collar", "collar closed forms");
  collar_m.def("half_length", &collar::half_length, py::arg("ell"));
  collar_m.def("width", &collar::width, py::arg("ell"));
  collar_m.def("conformal_factor", &collar::conformal_factor, py::arg("ell"),
               py::arg("s"));
  collar_m.def("thin_cut", &collar::thin_cut, py::arg("ell"), py::arg("delta"));
  collar_m.def("geodesic_distance", &collar::geodesic_distance, py::arg("ell"),
               py::arg("s"));
  collar_m.def("truncation_level", &collar::truncation_level, py::arg("ell"),
               py::arg("c"));
  collar_m.def("collar_area", &collar::collar_area, py::arg("ell"),
               py::arg("s1"), py::arg("s2"));
  collar_m.attr("MAX_SHORT_LENGTH") = collar::kMaxShortLength;

  auto reduced_m = m.def_submodule("reduced", "reduced eigenvalue models");
  reduced_m.def(
      "c_top",
      [](int gp, int gm) { return reduced::c_top({gp, gm}); },
      py::arg("genus_plus"), py::arg("genus_minus"));
  reduced_m.def(
      "graph_lambda",
      [](int gp, int gm, double ell) { return reduced::graph_lambda({gp, gm}, ell); },
      py::arg("genus_plus"), py::arg("genus_minus"), py::arg("ell"));
  reduced_m.def(
      "sl_lambda",
      [](int gp, int gm, double ell, int grid) {
        return reduced::sl_lambda(reduced::make_sl_model({gp, gm}, ell, grid));
      },
      py::arg("genus_plus"), py::arg("genus_minus"), py::arg("ell"),
      py::arg("grid") = 4096);

  auto hexagon_m = m.def_submodule("hexagon", "right-angled hexagons");
  hexagon_m.def(
      "solve",
      [](double a, double b, double c) {
        const auto s = hexagon::solve_hexagon({a, b, c});
        return py::make_tuple(s.gamma_a, s.gamma_b, s.gamma_c);
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "seam lengths opposite the three given half-boundary sides");

  auto qdiff_m = m.def_submodule("qdiff", "quadratic differential norms");
  qdiff_m.def(
      "dz2_norms",
      [](double ell) {
        const auto n = qdiff::dz2_norms(ell);
        py::dict d;
        d["l1"] = n.l1;
        d["l2_squared"] = n.l2_squared;
        d["linf"] = n.linf;
        return d;
      },
      py::arg("ell"));
  qdiff_m.def("principal_theta_norm_sq", &qdiff::principal_theta_norm_sq,
              py::arg("ell"));

  m.def("genus2_config_json",
        [](double ell1, double other, double twist, double h, int n_theta,
           double delta_cut) {
          io::SurfaceConfig cfg;
          cfg.fn = surface::genus2_config(ell1, other, twist);
          cfg.mesh = make_params(h, n_theta, delta_cut);
          return io::write_surface_config(cfg);
        },
        py::arg("ell1"), py::arg("other") = 1.0, py::arg("twist") = 0.0,
        py::arg("h") = 0.1, py::arg("n_theta") = 64, py::arg("delta_cut") = 0.3);

  m.def("genus3_chain_config_json",
        [](double ell1, double ell2, double other, double h, int n_theta,
           double delta_cut) {
          io::SurfaceConfig cfg;
          cfg.fn = surface::genus3_chain_config(ell1, ell2, other);
          cfg.mesh = make_params(h, n_theta, delta_cut);
          return io::write_surface_config(cfg);
        },
        py::arg("ell1"), py::arg("ell2"), py::arg("other") = 1.0,
        py::arg("h") = 0.1, py::arg("n_theta") = 64, py::arg("delta_cut") = 0.3);

  m.def("validate_config",
        [](const std::string& config_json) {
          const auto cfg = io::parse_surface_config(config_json);
          const auto d = surface::validate(cfg.fn);
          return py::make_tuple(d.ok, d.messages);
        },
        py::arg("config_json"));

  m.def("solve", &solve_config, py::arg("config_json"), py::arg("k") = 6,
        py::arg("seed") = 42,
        "mesh the configured surface and return the lowest eigenvalues");

  m.def("cylinder_oracle",
        [](double ell, double s_max, int modes, int grid) {
          return spectrum::oracle_cylinder(ell, s_max, modes, grid);
        },
        py::arg("ell"), py::arg("s_max"), py::arg("modes") = 8,
        py::arg("grid") = 4000);
}
