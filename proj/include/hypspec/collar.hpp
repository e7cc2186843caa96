// Closed-form geometry of hyperbolic collars.
//
// A collar around a simple closed geodesic of length ell is the cylinder
// (-X(ell), X(ell)) x S^1 with metric rho^2(s) (ds^2 + dtheta^2),
//   rho(s) = ell / (2 pi cos(ell s / 2 pi)).
// All lengths are in hyperbolic units.

#pragma once

#include <cmath>

namespace hypspec::collar {

// 2 arsinh(1): geodesics shorter than this have embedded collars of the
// standard form; several formulas below require ell below this bound.
inline constexpr double kMaxShortLength = 1.7627471740390860505;  // 2*asinh(1)

// X(ell), the half-length of the collar cylinder in the s coordinate.
double half_length(double ell);

// rho(s) for |s| < X(ell).
double conformal_factor(double ell, double s);

// Limit value rho(X^-) = ell / (2 pi tanh(ell/2)); the conformal factor at
// the collar boundary.  Provided separately since conformal_factor takes
// |s| < X strictly.
double boundary_conformal_factor(double ell);

// X_delta(ell): s-extent of the delta-thin part of the collar.  Zero when
// delta < ell/2 (the whole collar is already delta-thick).
double thin_cut(double ell, double delta);

// Width w of the collar, characterised by sinh(w/2) sinh(ell/2) = 1;
// the hyperbolic distance between the two boundary circles.
double width(double ell);

// Hyperbolic distance from the central geodesic {0} x S^1 to the circle
// {s} x S^1, i.e. the integral of rho over (0, s).  Odd in s.
double geodesic_distance(double ell, double s);

// Z_c(ell): the s-coordinate of the circle at hyperbolic distance c from the
// collar boundary, c in [0, width/2].  Z_0 = X(ell), Z_{w/2} = 0.
double truncation_level(double ell, double c);

// Geodesic curvature of the circle {s} x S^1: -sin(ell s / 2 pi).
double geodesic_curvature(double ell, double s);

// Hyperbolic area of the subcylinder (s1, s2) x S^1:
//   ell (tan(ell s2 / 2 pi) - tan(ell s1 / 2 pi)).
// The full collar has area 2 ell / sinh(ell/2).
double collar_area(double ell, double s1, double s2);

}  // namespace hypspec::collar
