// Closed hyperbolic surfaces from pants decompositions.  A surface is
// described by a pants graph (which boundary slots are glued along which
// curves) plus Fenchel-Nielsen lengths and twists; build_mesh produces a
// conforming triangulation in conformal charts:
//   - one structured (s, theta) chart per curve whose collar has a
//     delta_cut-thin part,
//   - two half-plane hexagon charts per pair of pants (the truncated
//     hexagon, i.e. the hexagon minus the collar strips).
// The Dirichlet energy is conformally invariant, so stiffness assembly is
// Euclidean in every chart; only the mass matrix sees the conformal factor.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypspec/hexagon.hpp"

namespace hypspec::surface {

struct Slot {
  int pants = -1;
  int slot = -1;  // 0..2
  bool operator==(const Slot&) const = default;
};

// One gluing curve: the two pants boundary slots it identifies.
struct CurveGluing {
  Slot end0, end1;
};

struct PantsGraph {
  int n_pants = 0;
  std::vector<CurveGluing> curves;

  int genus() const { return n_pants / 2 + 1; }
};

struct FNCoordinates {
  PantsGraph graph;
  std::vector<double> lengths;  // one per curve
  std::vector<double> twists;   // radians, stored unreduced
};

struct Diagnostics {
  bool ok = true;
  std::vector<std::string> messages;
};

// Structural checks: slot usage, connectivity, counts, length bounds.
Diagnostics validate(const FNCoordinates& fn);

struct MeshParams {
  double h = 0.1;          // target physical edge length
  int n_theta = 64;        // angular resolution of collar rings (even, >= 16)
  double delta_cut = 0.3;  // injectivity level of the chart split
};

struct Vertex {
  int chart;
  double x, y;  // chart coordinates: (s, theta) or half-plane (x, y)
  double rho;   // conformal factor at the vertex
};

struct Triangle {
  std::array<int, 3> v;
  int chart;
};

struct CollarChart {
  int curve;
  double ell;
  double s_min, s_max;  // [-X_cut, X_cut]
  int n_s;              // number of s intervals (rows of vertices = n_s + 1)
  int n_theta;
  int first_vertex;     // vertex (r, k) = first_vertex + r * n_theta + k
};

struct HexChart {
  int pants;
  int half;             // 0 or 1 (mirror copy)
  int first_vertex;
  int n_vertices;
  // ring_node[i][k]: vertex of the arc node of boundary i at ring index k,
  // k = 0..n_theta/2 (theta = 2 pi k / n_theta along this half)
  std::array<std::vector<int>, 3> ring_node;
  // seam_node[i]: nodes along the truncated seam opposite boundary i,
  // ordered from its start corner; used for the half<->half identification
  std::array<std::vector<int>, 3> seam_node;
};

struct ChartRef {
  // kFlat is a test-harness chart with conformal factor 1 (Euclidean patch).
  enum Kind { kCollar, kHexagon, kFlat } kind;
  int index;  // into collar_charts or hex_charts; unused for kFlat
};

struct SurfaceMesh {
  int genus = 0;
  MeshParams params;
  std::vector<Vertex> vertices;
  std::vector<Triangle> triangles;
  std::vector<ChartRef> charts;
  std::vector<CollarChart> collar_charts;
  std::vector<HexChart> hex_charts;
  // conforming interface identifications (vertex pairs glued to one node)
  std::vector<std::array<int, 2>> identifications;

  // derived: vertex -> degree-of-freedom map (union over identifications)
  std::vector<int> vertex_dof;
  int n_dofs = 0;

  int euler_characteristic() const;
  // For collar charts: curve ell by chart id, used during assembly.
  std::optional<int> collar_chart_of_curve(int curve) const;
};

SurfaceMesh build_mesh(const FNCoordinates& fn, const MeshParams& params);

// Structured view of a curve's collar chart for eigenfunction post-
// processing.  node(r, k) indexes mesh.vertices.
struct CollarGrid {
  std::vector<double> s;      // size n_s + 1
  std::vector<double> theta;  // size n_theta
  int n_theta;
  int first_vertex;
  int node(int r, int k) const { return first_vertex + r * n_theta + k; }
};

CollarGrid collar_restriction(const SurfaceMesh& mesh, int curve);

// Standalone Dirichlet test cylinder: the truncated collar |s| <= s_max
// meshed as a single structured chart.  boundary_vertices lists the two end
// rings (for Dirichlet elimination).
struct CylinderMesh {
  SurfaceMesh mesh;
  std::vector<int> boundary_vertices;
};

CylinderMesh build_cylinder_mesh(double ell, double s_max,
                                 const MeshParams& params);

// Ready-made pants graphs used throughout the experiments.
// Genus 2 with a disconnecting curve: curve 0 joins two one-handled pants
// (each of which has its remaining two slots self-glued by curves 1, 2).
FNCoordinates genus2_config(double ell1, double other_len, double twist = 0.0);
// Genus 3 chain with two disconnecting curves (curve 0 = sigma^1 splits off
// a genus-1 piece; curve 4 = sigma^2 splits off a genus-1 piece at the
// other end).
FNCoordinates genus3_chain_config(double ell1, double ell2, double other_len);

}  // namespace hypspec::surface
