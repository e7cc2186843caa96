#include <cmath>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "hypspec/collar.hpp"
#include "hypspec/quadrature.hpp"

using namespace hypspec;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSelfDual = 2.0 * std::asinh(1.0);
}  // namespace

TEST_CASE("conformal factor closed form") {
  CHECK(collar::conformal_factor(1.0, 0.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));

  // limit value at the collar boundary: ell / (2 pi tanh(ell/2))
  const double lim = collar::boundary_conformal_factor(1.0);
  CHECK(lim == doctest::Approx(0.3444039).epsilon(1e-5));
  const double x = collar::half_length(1.0);
  CHECK(collar::conformal_factor(1.0, x * (1.0 - 1e-9)) == doctest::Approx(lim).epsilon(1e-6));

  // even in s
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 0.999);
  const double x02 = collar::half_length(0.2);
  for (int i = 0; i < 50; ++i) {
    const double s = u(rng) * x02;
    CHECK(collar::conformal_factor(0.2, -s) == doctest::Approx(collar::conformal_factor(0.2, s)).epsilon(1e-15));
  }

  CHECK_THROWS_AS((void)collar::conformal_factor(1.0, x * 1.01), std::domain_error);
}

TEST_CASE("half length") {
  // sinh(ell/2) = 1 forces arctan = pi/4, X = pi^2/(2 ell)
  CHECK(collar::half_length(kSelfDual) ==
        doctest::Approx(kPi * kPi / (2.0 * kSelfDual)).epsilon(1e-14));
  CHECK(collar::half_length(kSelfDual) == doctest::Approx(2.7994952).epsilon(1e-6));

  // small-ell behaviour X = pi^2/ell - pi + O(ell)
  CHECK(collar::half_length(0.01) == doctest::Approx(kPi * kPi / 0.01 - kPi).epsilon(1e-5));
  CHECK(collar::half_length(0.01) == doctest::Approx(983.82).epsilon(1e-4));

  CHECK(collar::half_length(0.1) > collar::half_length(0.2));
  CHECK_THROWS_AS((void)collar::half_length(-1.0), std::domain_error);
  CHECK_THROWS_AS((void)collar::half_length(0.0), std::domain_error);
}

TEST_CASE("thin cut") {
  CHECK(collar::thin_cut(0.5, 0.2) == 0.0);
  // direct evaluation of the X_delta formula
  {
    const double ell = 0.1, delta = 0.1;
    const double expect = (2.0 * kPi / ell) *
        (kPi / 2.0 - std::asin(std::sinh(ell / 2.0) / std::sinh(delta)));
    CHECK(collar::thin_cut(ell, delta) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(expect == doctest::Approx(65.84).epsilon(1e-3));
  }
  // pi/delta - C <= X - X_delta <= pi^2/(2 delta) for ell <= 2 delta,
  // with a single constant C over a sweep
  double worst_c = 0.0;
  for (double delta : {0.1, 0.2, 0.3, 0.5, 0.8}) {
    for (double ell : {0.01, 0.05, 0.1, 0.2}) {
      if (ell > 2.0 * delta) continue;
      const double gap = collar::half_length(ell) - collar::thin_cut(ell, delta);
      CHECK(gap <= kPi * kPi / (2.0 * delta) + 1e-12);
      worst_c = std::max(worst_c, kPi / delta - gap);
    }
  }
  CHECK(worst_c < 4.0);

  CHECK_THROWS_AS((void)collar::thin_cut(0.1, 0.95), std::domain_error);
  CHECK_THROWS_AS((void)collar::thin_cut(0.1, 0.0), std::domain_error);
}

TEST_CASE("width") {
  // self-dual point: w = ell when sinh(ell/2) = 1
  CHECK(collar::width(kSelfDual) == doctest::Approx(kSelfDual).epsilon(1e-14));
  CHECK(collar::width(0.1) == doctest::Approx(7.37818).epsilon(1e-6));

  // quadrature of rho over (-X, X) reproduces the width
  for (double ell : {0.05, 0.1, 0.5, 1.0}) {
    const double x = collar::half_length(ell);
    const double q = quadrature::integrate(
        [ell](double s) { return collar::conformal_factor(ell, s); },
        -x * (1.0 - 1e-13), x * (1.0 - 1e-13), 1e-13);
    CHECK(q == doctest::Approx(collar::width(ell)).epsilon(1e-10));
  }
}

TEST_CASE("truncation level") {
  CHECK(collar::truncation_level(0.3, 0.0) ==
        doctest::Approx(collar::half_length(0.3)).epsilon(1e-14));
  CHECK(collar::truncation_level(kSelfDual, collar::width(kSelfDual) / 2.0) ==
        doctest::Approx(0.0).epsilon(1e-10));

  // Z_c is the point at hyperbolic distance c from the collar boundary:
  // cross-check against quadrature of rho over (Z_c, X)
  for (double ell : {0.1, 0.5, 1.0}) {
    for (double c : {0.2, 1.0}) {
      if (c > collar::width(ell) / 2.0) continue;
      const double z = collar::truncation_level(ell, c);
      const double x = collar::half_length(ell);
      const double q = quadrature::integrate(
          [ell](double s) { return collar::conformal_factor(ell, s); },
          z, x * (1.0 - 1e-13), 1e-13);
      CHECK(q == doctest::Approx(c).epsilon(1e-9));
    }
  }
  CHECK(collar::truncation_level(0.1, 1.0) == doctest::Approx(90.16).epsilon(1e-3));
  CHECK_THROWS_AS((void)collar::truncation_level(0.1, -0.1), std::domain_error);
  CHECK_THROWS_AS((void)collar::truncation_level(0.1, 100.0), std::domain_error);
}

TEST_CASE("geodesic curvature") {
  CHECK(collar::geodesic_curvature(1.0, 0.0) == 0.0);
  const double x = collar::half_length(1.0);
  // sin(pi/2 - arctan(sinh(ell/2))) = 1/cosh(ell/2)
  CHECK(collar::geodesic_curvature(1.0, x * (1.0 - 1e-10)) ==
        doctest::Approx(-1.0 / std::cosh(0.5)).epsilon(1e-8));
  CHECK(-1.0 / std::cosh(0.5) == doctest::Approx(-0.886819).epsilon(1e-5));
  CHECK(collar::geodesic_curvature(1.0, -1.3) ==
        doctest::Approx(-collar::geodesic_curvature(1.0, 1.3)).epsilon(1e-15));
}

TEST_CASE("collar area") {
  CHECK(collar::collar_area(0.7, 0.4, 0.4) == 0.0);
  const double xsd = collar::half_length(kSelfDual);
  CHECK(collar::collar_area(kSelfDual, -xsd, xsd) ==
        doctest::Approx(2.0 * kSelfDual).epsilon(1e-12));
  // full collar area -> 4 as ell -> 0
  {
    const double ell = 1e-3;
    const double x = collar::half_length(ell);
    CHECK(collar::collar_area(ell, -x, x) == doctest::Approx(4.0).epsilon(1e-6));
  }
  // quadrature of 2 pi rho^2 on random subintervals
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  for (double ell : {0.1, 0.5, 1.0}) {
    const double x = collar::half_length(ell);
    for (int i = 0; i < 5; ++i) {
      double s1 = u(rng) * x, s2 = u(rng) * x;
      if (s1 > s2) std::swap(s1, s2);
      const double q = quadrature::integrate(
          [ell](double s) {
            const double r = collar::conformal_factor(ell, s);
            return 2.0 * kPi * r * r;
          },
          s1, s2, 1e-13);
      CHECK(q == doctest::Approx(collar::collar_area(ell, s1, s2)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS((void)collar::collar_area(0.5, 0.3, 0.1), std::domain_error);
}

TEST_CASE("log-derivative and comparability bounds") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  for (double ell : {0.05, 0.3, 1.0, 1.7}) {
    const double x = collar::half_length(ell);
    for (int i = 0; i < 400; ++i) {
      const double s = u(rng) * x;
      const double rho = collar::conformal_factor(ell, s);
      const double dlog = (ell / (2.0 * kPi)) * std::tan(ell * s / (2.0 * kPi));
      CHECK(std::abs(dlog) <= rho * (1.0 + 1e-12));
    }
    for (int i = 0; i < 200; ++i) {
      const double s1 = u(rng) * x, s2 = u(rng) * x;
      CHECK(collar::conformal_factor(ell, s1) <=
            std::exp(std::abs(s1 - s2)) * collar::conformal_factor(ell, s2) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("thin part area and injectivity proxy") {
  // Area(delta-thin collar) <= K * delta with one constant across sweeps
  double worst_k = 0.0;
  for (double delta : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    for (double ell : {0.01, 0.05, 0.1, 0.3, 0.7}) {
      const double xd = collar::thin_cut(ell, delta);
      if (xd == 0.0) continue;
      const double area = collar::collar_area(ell, -xd, xd);
      worst_k = std::max(worst_k, area / delta);
      // rho(X_delta) <= delta <= pi rho(X_delta)
      const double rho = collar::conformal_factor(ell, xd);
      CHECK(rho <= delta * (1.0 + 1e-12));
      CHECK(delta <= kPi * rho * (1.0 + 1e-12));
    }
  }
  CHECK(worst_k < 5.0);
}
