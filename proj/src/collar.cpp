#include "hypspec/collar.hpp"

#include <stdexcept>

namespace hypspec::collar {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive_length(double ell) {
  if (!(ell > 0.0)) throw std::domain_error("collar: ell must be positive");
}

}  // namespace

double half_length(double ell) {
  require_positive_length(ell);
  return (2.0 * kPi / ell) * (kPi / 2.0 - std::atan(std::sinh(ell / 2.0)));
}

double conformal_factor(double ell, double s) {
  require_positive_length(ell);
  if (!(std::abs(s) < half_length(ell)))
    throw std::domain_error("collar: |s| must be < X(ell)");
  return ell / (2.0 * kPi * std::cos(ell * s / (2.0 * kPi)));
}

double boundary_conformal_factor(double ell) {
  require_positive_length(ell);
  return ell / (2.0 * kPi * std::tanh(ell / 2.0));
}

double thin_cut(double ell, double delta) {
  require_positive_length(ell);
  if (!(delta > 0.0 && delta < std::asinh(1.0)))
    throw std::domain_error("collar: delta must lie in (0, arsinh(1))");
  if (delta < ell / 2.0) return 0.0;
  const double r = std::sinh(ell / 2.0) / std::sinh(delta);
  return (2.0 * kPi / ell) * (kPi / 2.0 - std::asin(r));
}

double width(double ell) {
  require_positive_length(ell);
  return 2.0 * std::asinh(1.0 / std::sinh(ell / 2.0));
}

double geodesic_distance(double ell, double s) {
  require_positive_length(ell);
  if (!(std::abs(s) < half_length(ell)))
    throw std::domain_error("collar: |s| must be < X(ell)");
  const double u = ell * s / (2.0 * kPi);
  // antiderivative of sec: log(sec u + tan u) = asinh(tan u)
  return std::asinh(std::tan(u));
}

double truncation_level(double ell, double c) {
  require_positive_length(ell);
  const double half_width = width(ell) / 2.0;
  if (!(c >= 0.0 && c <= half_width * (1.0 + 1e-12)))
    throw std::domain_error("collar: c must lie in [0, width/2]");
  const double y0 = std::atan(std::sinh(ell / 2.0));
  const double yc = 2.0 * std::atan(std::exp(c) * std::tan(y0 / 2.0));
  double z = (2.0 * kPi / ell) * (kPi / 2.0 - yc);
  return z > 0.0 ? z : 0.0;
}

double geodesic_curvature(double ell, double s) {
  require_positive_length(ell);
  if (!(std::abs(s) < half_length(ell)))
    throw std::domain_error("collar: |s| must be < X(ell)");
  return -std::sin(ell * s / (2.0 * kPi));
}

double collar_area(double ell, double s1, double s2) {
  const double x = half_length(ell);
  if (!(s1 <= s2))
    throw std::domain_error("collar: area interval must satisfy s1 <= s2");
  if (!(s1 >= -x * (1.0 + 1e-12) && s2 <= x * (1.0 + 1e-12)))
    throw std::domain_error("collar: area interval must lie in [-X, X]");
  const double k = ell / (2.0 * kPi);
  return ell * (std::tan(k * s2) - std::tan(k * s1));
}

}  // namespace hypspec::collar
