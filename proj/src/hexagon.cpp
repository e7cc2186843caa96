#include "hypspec/hexagon.hpp"

#include <cmath>
#include <stdexcept>

namespace hypspec::hexagon {

using halfplane::Geodesic;
using halfplane::Mobius;
using halfplane::Point;

namespace {

double hexagon_rule(double opposite, double adj1, double adj2) {
  const double num = std::cosh(opposite) + std::cosh(adj1) * std::cosh(adj2);
  const double den = std::sinh(adj1) * std::sinh(adj2);
  const double arg = num / den;
  if (!(arg >= 1.0))
    throw std::runtime_error("hexagon: cosh rule argument below 1 (internal inconsistency)");
  return std::acosh(arg);
}

}  // namespace

SeamLengths solve_hexagon(const HexagonSpec& spec) {
  if (!(spec.a > 0.0 && spec.b > 0.0 && spec.c > 0.0))
    throw std::domain_error("hexagon: side lengths must be positive");
  SeamLengths s;
  s.gamma_c = hexagon_rule(spec.c, spec.a, spec.b);
  s.gamma_a = hexagon_rule(spec.a, spec.b, spec.c);
  s.gamma_b = hexagon_rule(spec.b, spec.c, spec.a);
  return s;
}

Point EmbeddedHexagon::point_on_side(int k, double t) const {
  return halfplane::position(halfplane::advance(side_pose[k], t));
}

Point EmbeddedHexagon::offset_into_interior(int k, double t, double d) const {
  Mobius p = halfplane::advance(side_pose[k], t);
  p = halfplane::turn(p, M_PI / 2.0);
  p = halfplane::advance(p, d);
  return halfplane::position(p);
}

EmbeddedHexagon embed_hexagon(const HexagonSpec& spec) {
  EmbeddedHexagon hex;
  hex.spec = spec;
  hex.seams = solve_hexagon(spec);
  hex.side_length = {spec.a,        hex.seams.gamma_c, spec.b,
                     hex.seams.gamma_a, spec.c,        hex.seams.gamma_b};

  // Counterclockwise walk: advance along each side, then turn left by the
  // exterior angle pi/2 at each (right-angled) vertex.
  Mobius pose = Mobius::identity();
  for (int k = 0; k < 6; ++k) {
    hex.side_pose[k] = pose;
    hex.vertex[k] = halfplane::position(pose);
    pose = halfplane::advance(pose, hex.side_length[k]);
    pose = halfplane::turn(pose, M_PI / 2.0);
  }

  // The walk must return to the initial pose.
  const Point back = halfplane::position(pose);
  const Point fwd = halfplane::position(halfplane::advance(pose, 1e-3));
  const Point fwd0 = halfplane::position(halfplane::advance(Mobius::identity(), 1e-3));
  if (halfplane::distance(back, Point(0.0, 1.0)) > 1e-8 ||
      halfplane::distance(fwd, fwd0) > 1e-8)
    throw std::runtime_error("hexagon: walk failed to close");

  for (int k = 0; k < 6; ++k) {
    hex.side_geodesic[k] =
        Geodesic::through(hex.vertex[k], hex.point_on_side(k, hex.side_length[k]));
  }
  return hex;
}

std::array<BoundaryMarking, 3> pants_boundary_marking(double l1, double l2,
                                                      double l3) {
  if (!(l1 > 0.0 && l2 > 0.0 && l3 > 0.0))
    throw std::domain_error("pants: boundary lengths must be positive");
  // side order gamma_a, G_c, gamma_b, G_a, gamma_c, G_b: each boundary side
  // starts at the foot of one seam and ends at the foot of the next.
  std::array<BoundaryMarking, 3> m;
  m[0] = {l1, 1, 2};  // gamma_a runs from the G_b foot to the G_c foot
  m[1] = {l2, 2, 0};
  m[2] = {l3, 0, 1};
  return m;
}

}  // namespace hypspec::hexagon
