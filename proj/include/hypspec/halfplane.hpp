// Upper half-plane model utilities: points, isometries (as real Moebius
// transforms), geodesics and distances.  The hyperbolic metric is
// (dx^2 + dy^2) / y^2, conformal factor 1/y.

#pragma once

#include <complex>

namespace hypspec::halfplane {

using Point = std::complex<double>;

// Orientation-preserving isometry z -> (az + b) / (cz + d), normalised to
// det = 1.  Also used as a "pose": the image of the standard frame (point i,
// heading straight up the imaginary axis).
struct Mobius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Point apply(Point z) const;
  Mobius compose(const Mobius& other) const;  // this ∘ other
  Mobius inverse() const;

  // Translation by hyperbolic distance t along the imaginary axis.
  static Mobius axis_translation(double t);
  // Rotation by angle phi about the point i (phi > 0 turns the heading
  // counterclockwise in the Euclidean sense at i).
  static Mobius rotation_about_i(double phi);
  // Isometry with pose semantics: identity = standard frame.
  static Mobius identity() { return {}; }
};

// Geodesic: either a vertical line x = x0 or a half-circle centred on the
// real axis.
struct Geodesic {
  bool vertical = false;
  double x0 = 0.0;      // vertical line abscissa
  double center = 0.0;  // circle center (on the real axis)
  double radius = 1.0;  // circle radius

  static Geodesic through(Point p, Point q);
};

double distance(Point p, Point q);

// Signed hyperbolic distance from z to the geodesic: sinh(d) with sign.
// For a vertical line the sign is that of (x - x0); for a circle positive
// outside, negative inside.
double signed_sinh_distance(Point z, const Geodesic& g);

// Pose navigation: walk forward / turn, as used to construct right-angled
// polygons.  A pose F places the standard frame; these return the new pose.
Mobius advance(const Mobius& pose, double dist);
Mobius turn(const Mobius& pose, double phi);

// Position of a pose (image of i) and its heading (unit tangent angle in the
// Euclidean chart, mostly for diagnostics).
Point position(const Mobius& pose);

}  // namespace hypspec::halfplane
