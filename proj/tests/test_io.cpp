#include <cstdio>
#include <stdexcept>
#include <fstream>

#include "doctest.h"
#include "hypspec/io.hpp"
#include "hypspec/spectrum.hpp"
#include "hypspec/surface.hpp"

using namespace hypspec;

namespace {
surface::MeshParams coarse() {
  surface::MeshParams p;
  p.h = 0.2;
  p.n_theta = 32;
  p.delta_cut = 0.3;
  return p;
}
}  // namespace

TEST_CASE("format_full round-trips binary64") {
  for (double v : {0.1, 1.0 / 3.0, 1e-17, 12345.678901234567, -2.5e300}) {
    CHECK(std::stod(io::format_full(v)) == v);
  }
}

TEST_CASE("config_hash is the 64-bit FNV-1a") {
  CHECK(io::config_hash("") == 14695981039346656037ull);
  CHECK(io::config_hash("abc") == 0xe71fa2190541574bull);
  CHECK(io::config_hash("abc") != io::config_hash("abd"));
}

TEST_CASE("mesh dump round-trip is bit exact") {
  auto mesh = surface::build_mesh(surface::genus2_config(0.2, 1.0), coarse());
  const std::string once = io::dump_mesh(mesh);
  CHECK(once.substr(0, 15) == "hypspec-mesh v1");
  auto loaded = io::load_mesh_string(once);
  CHECK(io::dump_mesh(loaded) == once);

  // the loaded mesh is functionally identical: same dof count and identical
  // assembled matrices
  CHECK(loaded.n_dofs == mesh.n_dofs);
  auto sys_a = spectrum::assemble(mesh);
  auto sys_b = spectrum::assemble(loaded);
  CHECK((sys_a.stiffness - sys_b.stiffness).norm() == 0.0);
  CHECK((sys_a.mass - sys_b.mass).norm() == 0.0);
}

TEST_CASE("mesh loader rejects malformed input") {
  CHECK_THROWS_AS((void)io::load_mesh_string("bogus\n"), std::runtime_error);
  CHECK_THROWS_AS((void)io::load_mesh_string("hypspec-mesh v1\nfrob 1\n"),
                  std::runtime_error);
  // triangle referencing a missing vertex
  CHECK_THROWS_AS((void)io::load_mesh_string("hypspec-mesh v1\n"
                                             "counts 1 1 1 0\n"
                                             "chart flat\n"
                                             "v 0 0 0 1\n"
                                             "t 0 1 2\n"),
                  std::runtime_error);
}

TEST_CASE("matrix dump header") {
  auto mesh = surface::build_mesh(surface::genus2_config(0.3, 1.0), coarse());
  auto sys = spectrum::assemble(mesh);
  const std::string text = io::dump_matrix(sys.mass, "mass");
  CHECK(text.rfind("hypspec-matrix v1 mass ", 0) == 0);
}

TEST_CASE("CSV format and determinism") {
  io::CsvTable a("demo", "x=1", {"ell", "lambda"});
  a.add_row({0.1, 0.25});
  a.add_row({0.05, 1.0 / 3.0});
  io::CsvTable b("demo", "x=1", {"ell", "lambda"});
  b.add_row({0.1, 0.25});
  b.add_row({0.05, 1.0 / 3.0});
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("# hypspec v1 demo ", 0) == 0);
  // header hash changes with the configuration
  io::CsvTable c("demo", "x=2", {"ell", "lambda"});
  CHECK(c.str().substr(0, 40) != a.str().substr(0, 40));
  // full-precision payload
  CHECK(a.str().find(io::format_full(1.0 / 3.0)) != std::string::npos);
  CHECK_THROWS_AS(a.add_row({1.0}), std::invalid_argument);
}

TEST_CASE("surface config JSON round trip") {
  io::SurfaceConfig cfg;
  cfg.fn = surface::genus3_chain_config(0.1, 0.5, 1.0);
  cfg.mesh.h = 0.07;
  cfg.mesh.n_theta = 48;
  const std::string text = io::write_surface_config(cfg);
  auto back = io::parse_surface_config(text);
  CHECK(back.fn.graph.n_pants == cfg.fn.graph.n_pants);
  REQUIRE(back.fn.lengths.size() == cfg.fn.lengths.size());
  for (size_t i = 0; i < cfg.fn.lengths.size(); ++i) {
    CHECK(back.fn.lengths[i] == cfg.fn.lengths[i]);
    CHECK(back.fn.graph.curves[i].end0 == cfg.fn.graph.curves[i].end0);
    CHECK(back.fn.graph.curves[i].end1 == cfg.fn.graph.curves[i].end1);
  }
  CHECK(back.mesh.h == 0.07);
  CHECK(back.mesh.n_theta == 48);
  CHECK(surface::validate(back.fn).ok);

  CHECK_THROWS((void)io::parse_surface_config(
      R"({"genus": 5, "pants": 2, "curves": [{"slots": [[0,0],[1,0]], "length": 1.0}]})"));
}

TEST_CASE("svg plot artifact") {
  const std::string path = "test_plot.svg";
  io::write_svg_plot(path, "demo",
                     {{"series", {0.1, 0.2, 0.4}, {1.0, 2.0, 1.5}}}, true, false);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("<svg", 0) == 0);
  in.close();
  std::remove(path.c_str());
}
