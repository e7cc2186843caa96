// Right-angled hyperbolic hexagons and their half-plane embedding; the
// geometric kernel of a pair of pants (two mirror copies glued along the
// three seam sides).

#pragma once

#include <array>

#include "hypspec/halfplane.hpp"

namespace hypspec::hexagon {

// Lengths of the three alternating sides gamma_a, gamma_b, gamma_c.  For a
// pair of pants with boundary lengths (l1, l2, l3) these are the half
// lengths (l1/2, l2/2, l3/2).
struct HexagonSpec {
  double a, b, c;
};

// Lengths of the sides opposite gamma_a, gamma_b, gamma_c (the seams of the
// pants).
struct SeamLengths {
  double gamma_a, gamma_b, gamma_c;
};

// Solve the right-angled hexagon:
//   cosh(G_c) = (cosh c + cosh a cosh b) / (sinh a sinh b), cyclically.
SeamLengths solve_hexagon(const HexagonSpec& spec);

// A hexagon realised in the upper half-plane.  Sides in cyclic order:
//   gamma_a, G_c, gamma_b, G_a, gamma_c, G_b
// traversed counterclockwise (interior on the left).  side_pose[k] is the
// pose at the start vertex of side k, heading along the side; so the point
// at arclength t along side k is side_pose[k] translated by t, and moving
// off the side by +pi/2 turn goes into the interior.
struct EmbeddedHexagon {
  HexagonSpec spec;
  SeamLengths seams;
  std::array<double, 6> side_length;          // a, G_c, b, G_a, c, G_b
  std::array<halfplane::Mobius, 6> side_pose;
  std::array<halfplane::Point, 6> vertex;     // vertex[k] = start of side k
  std::array<halfplane::Geodesic, 6> side_geodesic;

  // Point at arclength t along side k (t in [0, side_length[k]]).
  halfplane::Point point_on_side(int k, double t) const;
  // Point at distance d orthogonally into the interior from the point at
  // arclength t along side k.
  halfplane::Point offset_into_interior(int k, double t, double d) const;
};

// Construct the embedding by walking the six sides with right-angle turns.
// Throws std::runtime_error if the walk fails to close within 1e-8.
EmbeddedHexagon embed_hexagon(const HexagonSpec& spec);

// Marked boundary circles of the pair of pants with boundary lengths
// (l1, l2, l3).  Each boundary circle carries an arclength-proportional
// angular coordinate theta in [0, 2pi) anchored at a seam foot; the two
// seam feet sit at theta = 0 and theta = pi (they are antipodal since the
// pants is two mirror hexagons).  seam_at_zero / seam_at_pi name the seam
// (0 = seam opposite boundary 1, etc.) whose foot is at that angle.
struct BoundaryMarking {
  double length;      // l_i
  int seam_at_zero;   // seam index whose foot anchors theta = 0
  int seam_at_pi;
};

std::array<BoundaryMarking, 3> pants_boundary_marking(double l1, double l2,
                                                      double l3);

}  // namespace hypspec::hexagon
