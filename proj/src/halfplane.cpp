#include "hypspec/halfplane.hpp"

#include <cmath>
#include <stdexcept>

namespace hypspec::halfplane {

Point Mobius::apply(Point z) const {
  return (a * z + b) / (c * z + d);
}

Mobius Mobius::compose(const Mobius& o) const {
  Mobius r;
  r.a = a * o.a + b * o.c;
  r.b = a * o.b + b * o.d;
  r.c = c * o.a + d * o.c;
  r.d = c * o.b + d * o.d;
  return r;
}

Mobius Mobius::inverse() const {
  // det = 1 is maintained by construction
  return Mobius{d, -b, -c, a};
}

Mobius Mobius::axis_translation(double t) {
  const double e = std::exp(t / 2.0);
  return Mobius{e, 0.0, 0.0, 1.0 / e};
}

Mobius Mobius::rotation_about_i(double phi) {
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  return Mobius{c, s, -s, c};
}

Geodesic Geodesic::through(Point p, Point q) {
  Geodesic g;
  if (std::abs(p.real() - q.real()) < 1e-14 * (1.0 + std::abs(p.real()))) {
    g.vertical = true;
    g.x0 = 0.5 * (p.real() + q.real());
    return g;
  }
  // center c satisfies |p - c|^2 = |q - c|^2 with c real
  const double c = (std::norm(q) - std::norm(p)) / (2.0 * (q.real() - p.real()));
  g.vertical = false;
  g.center = c;
  g.radius = std::abs(p - c);
  return g;
}

double distance(Point p, Point q) {
  const double y1 = p.imag(), y2 = q.imag();
  if (!(y1 > 0.0 && y2 > 0.0))
    throw std::domain_error("halfplane: points must have positive imaginary part");
  const double t = 1.0 + std::norm(p - q) / (2.0 * y1 * y2);
  return std::acosh(t);
}

double signed_sinh_distance(Point z, const Geodesic& g) {
  const double y = z.imag();
  if (g.vertical) return (z.real() - g.x0) / y;
  return (std::norm(z - g.center) - g.radius * g.radius) /
         (2.0 * g.radius * y);
}

Mobius advance(const Mobius& pose, double dist) {
  return pose.compose(Mobius::axis_translation(dist));
}

Mobius turn(const Mobius& pose, double phi) {
  return pose.compose(Mobius::rotation_about_i(phi));
}

Point position(const Mobius& pose) { return pose.apply(Point(0.0, 1.0)); }

}  // namespace hypspec::halfplane
