#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hypspec/fncalculus.hpp"
#include "hypspec/reduced.hpp"

using namespace hypspec;

namespace {
fncalculus::BackendSpec sl_backend() {
  fncalculus::BackendSpec be;
  be.backend = fncalculus::Backend::kSl;
  return be;
}

fncalculus::BackendSpec fem_backend(double h = 0.1) {
  fncalculus::BackendSpec be;
  be.backend = fncalculus::Backend::kFem;
  be.mesh.h = h;
  be.mesh.n_theta = 64;
  be.mesh.delta_cut = 0.3;
  return be;
}
}  // namespace

TEST_CASE("fd_of_function calculus") {
  // quadratic: central difference is exact
  auto sq = [](double x) { return x * x; };
  auto d = fncalculus::fd_of_function(sq, 1.7, 0.1, fncalculus::Scheme::kCentral);
  CHECK(d.value == doctest::Approx(3.4).epsilon(1e-12));

  // cubic: central has an h^2 error, richardson removes it
  auto cube = [](double x) { return x * x * x; };
  auto dc = fncalculus::fd_of_function(cube, 2.0, 0.2, fncalculus::Scheme::kCentral);
  // (f(x+h) - f(x-h)) / 2h = 3x^2 + h^2 for f = x^3
  CHECK(std::abs(dc.value - 12.0) == doctest::Approx(0.2 * 0.2).epsilon(1e-10));
  auto dr =
      fncalculus::fd_of_function(cube, 2.0, 0.2, fncalculus::Scheme::kRichardson);
  CHECK(dr.value == doctest::Approx(12.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      (void)fncalculus::fd_of_function(sq, 1.0, 0.0, fncalculus::Scheme::kCentral),
      std::invalid_argument);
}

TEST_CASE("twist derivatives vanish for reduced backends") {
  fncalculus::DerivativeRequest req;
  req.base = surface::genus2_config(0.2, 1.0);
  req.kind = fncalculus::CoordKind::kTwist;
  req.index = 0;
  req.backend = sl_backend();
  CHECK(fncalculus::fd_derivative(req).value == 0.0);
  req.backend.backend = fncalculus::Backend::kGraph;
  CHECK(fncalculus::fd_derivative(req).value == 0.0);
}

TEST_CASE("graph backend derivative is c_top") {
  fncalculus::DerivativeRequest req;
  req.base = surface::genus2_config(0.1, 1.0);
  req.backend = sl_backend();
  req.backend.backend = fncalculus::Backend::kGraph;
  auto d = fncalculus::fd_derivative(req);
  CHECK(d.value == doctest::Approx(reduced::c_top({1, 1})).epsilon(1e-12));
}

TEST_CASE("sl backend leading term") {
  // d lambda / d ell1 ~ lambda / ell1 as the curve pinches
  fncalculus::DerivativeRequest req;
  req.base = surface::genus2_config(0.05, 1.0);
  req.backend = sl_backend();
  const double lam = fncalculus::lambda1(req.base, req.backend);
  const double ratio = fncalculus::fd_derivative(req).value * 0.05 / lam;
  CHECK(ratio > 0.9);
  CHECK(ratio < 1.1);
}

TEST_CASE("scheme consistency and step robustness") {
  fncalculus::DerivativeRequest req;
  req.base = surface::genus2_config(0.1, 1.0);
  req.backend = sl_backend();
  req.step = 0.01;
  req.scheme = fncalculus::Scheme::kCentral;
  auto central = fncalculus::fd_derivative(req);
  req.scheme = fncalculus::Scheme::kRichardson;
  auto rich = fncalculus::fd_derivative(req);
  CHECK(std::abs(central.value - rich.value) <=
        central.error_estimate + rich.error_estimate + 1e-12);

  // halving the step moves the central estimate by at most 4x its estimate
  req.scheme = fncalculus::Scheme::kCentral;
  req.step = 0.005;
  auto halved = fncalculus::fd_derivative(req);
  CHECK(std::abs(central.value - halved.value) <=
        4.0 * central.error_estimate + 1e-12);
}

TEST_CASE("derivative request guards") {
  fncalculus::DerivativeRequest req;
  req.base = surface::genus2_config(0.05, 1.0);
  req.backend = sl_backend();
  req.step = 0.06;  // would push the length negative
  CHECK_THROWS_AS((void)fncalculus::fd_derivative(req), std::invalid_argument);

  CHECK_THROWS_AS((void)fncalculus::rate_experiment_fn(
                      surface::genus2_config(0.2, 1.0), {0.1, 0.2}, sl_backend()),
                  std::invalid_argument);
}

TEST_CASE("sl rate experiment") {
  auto rep = fncalculus::rate_experiment_fn(surface::genus2_config(0.2, 1.0),
                                            {0.2, 0.1, 0.05}, sl_backend());
  REQUIRE(rep.rows.size() == 3);
  double lo = 1e300, hi = 0.0;
  for (const auto& r : rep.rows) {
    CHECK(r.dlam_dell1 > 0.0);
    lo = std::min(lo, r.r1_normalized);
    hi = std::max(hi, r.r1_normalized);
  }
  CHECK(hi / lo < 5.0);
  // ratio improves toward 1 as ell1 shrinks
  CHECK(std::abs(rep.rows[2].dlam_dell1 * rep.rows[2].ell1 / rep.rows[2].lambda - 1.0) <
        std::abs(rep.rows[0].dlam_dell1 * rep.rows[0].ell1 / rep.rows[0].lambda - 1.0));
}

TEST_CASE("backend consistency at ell1 = 0.1") {
  fncalculus::DerivativeRequest req;
  req.base = surface::genus2_config(0.1, 1.0);
  req.backend = sl_backend();
  const double d_sl = fncalculus::fd_derivative(req).value;
  req.backend = fem_backend();
  const double d_fem = fncalculus::fd_derivative(req).value;
  CHECK(std::abs(d_fem - d_sl) / d_sl < 0.15);
}

TEST_CASE("c0 comparison basics") {
  auto be = fem_backend(0.15);
  auto rows = fncalculus::c0_comparison({0.2}, 1.0, 1.0, be);
  REQUIRE(rows.size() == 1);
  // identical far coordinates: difference at solver tolerance
  CHECK(rows[0].diff < 1e-9);

  auto rows2 = fncalculus::c0_comparison({0.2}, 1.0, 0.8, be);
  CHECK(rows2[0].diff > 0.0);
  CHECK(rows2[0].reduced_value > 0.0);
}

TEST_CASE("sharpness trivial case") {
  surface::MeshParams p;
  p.h = 0.15;
  p.n_theta = 32;
  auto rows = fncalculus::sharpness_experiment({0.2}, 0.7, 0.7, 1.0, p);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].difference == 0.0);
}
