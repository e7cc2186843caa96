#include "hypspec/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "hypspec/collar.hpp"
#include "hypspec/delaunay.hpp"

namespace hypspec::surface {

namespace {

constexpr double kPi = 3.14159265358979323846;

using halfplane::Geodesic;
using halfplane::Point;

int mod(int a, int m) { return ((a % m) + m) % m; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Boundary index -> hexagon side index of gamma_i, and of the opposite seam.
constexpr int kGammaSide[3] = {0, 2, 4};
constexpr int kSeamSide[3] = {3, 5, 1};  // side of the seam opposite boundary i

struct TruncatedHexMesh {
  std::vector<delaunay::Point2> points;
  std::vector<std::array<int, 3>> tris;  // CCW in chart coordinates
  std::array<std::vector<int>, 3> ring_node;
  std::array<std::vector<int>, 3> seam_node;
};

// Triangulate the hexagon minus the three collar strips of hyperbolic depth
// d[i] from boundary side gamma_i.  Ring arcs carry n_theta/2 + 1 nodes at
// uniform angle; seams are sampled at physical spacing <= h.
TruncatedHexMesh mesh_truncated_hexagon(const hexagon::EmbeddedHexagon& hex,
                                        const std::array<double, 3>& depth,
                                        int n_theta, double h, unsigned seed) {
  TruncatedHexMesh out;
  auto add_point = [&](Point p) {
    out.points.push_back({p.real(), p.imag()});
    return static_cast<int>(out.points.size()) - 1;
  };

  // --- boundary loop -----------------------------------------------------
  // ring arcs (one per boundary), in walk order
  for (int i = 0; i < 3; ++i) {
    const int side = kGammaSide[i];
    const double len = hex.side_length[side];
    out.ring_node[i].resize(n_theta / 2 + 1);
    for (int k = 0; k <= n_theta / 2; ++k) {
      const double t = len * double(k) / double(n_theta / 2);
      out.ring_node[i][k] = add_point(hex.offset_into_interior(side, t, depth[i]));
    }
  }
  // truncated seams; seam after gamma side i connects boundary i to i+1 and
  // is opposite boundary i+2 (indices mod 3)
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int opp = (i + 2) % 3;
    const int side = kGammaSide[i] + 1;  // seam side in walk order
    const double len = hex.side_length[side];
    const double t0 = depth[i], t1 = len - depth[j];
    if (!(t1 - t0 > 0.25 * h))
      throw std::runtime_error("surface: truncated hexagon degenerate (seam consumed by collars)");
    const int m = std::max(1, static_cast<int>(std::ceil((t1 - t0) / h)));
    std::vector<int>& seam = out.seam_node[opp];
    seam.clear();
    seam.push_back(out.ring_node[i][n_theta / 2]);
    for (int q = 1; q < m; ++q)
      seam.push_back(add_point(hex.point_on_side(side, t0 + (t1 - t0) * q / m)));
    seam.push_back(out.ring_node[j][0]);
  }
  const int n_boundary = static_cast<int>(out.points.size());

  // closed boundary walk, as the chord polygon the kept mesh must fill:
  // ring i, then the seam connecting it to ring i+1 (interior nodes only)
  std::vector<int> loop;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k <= n_theta / 2; ++k) loop.push_back(out.ring_node[i][k]);
    const std::vector<int>& seam = out.seam_node[(i + 2) % 3];
    for (size_t q = 1; q + 1 < seam.size(); ++q) loop.push_back(seam[q]);
  }
  // even-odd ray crossing against the chord polygon
  auto inside_polygon = [&](Point p) {
    bool in = false;
    const size_t n = loop.size();
    for (size_t a = 0, b = n - 1; a < n; b = a++) {
      const double xa = out.points[loop[a]][0], ya = out.points[loop[a]][1];
      const double xb = out.points[loop[b]][0], yb = out.points[loop[b]][1];
      if ((ya > p.imag()) != (yb > p.imag()) &&
          p.real() < (xb - xa) * (p.imag() - ya) / (yb - ya) + xa)
        in = !in;
    }
    return in;
  };

  // interior sign of each side geodesic, probed just inside side 0
  const Point probe = hex.offset_into_interior(0, hex.side_length[0] / 2.0, 1e-3);
  std::array<double, 6> interior_sign;
  for (int k = 0; k < 6; ++k)
    interior_sign[k] =
        halfplane::signed_sinh_distance(probe, hex.side_geodesic[k]) > 0.0 ? 1.0 : -1.0;

  auto inside = [&](Point p, double margin) {
    if (!(p.imag() > 0.0)) return false;
    for (int i = 0; i < 3; ++i) {
      const double d = std::asinh(
          interior_sign[kGammaSide[i]] *
          halfplane::signed_sinh_distance(p, hex.side_geodesic[kGammaSide[i]]));
      if (d < depth[i] + margin) return false;
      const int seam = kSeamSide[i];
      const double ds = std::asinh(
          interior_sign[seam] * halfplane::signed_sinh_distance(p, hex.side_geodesic[seam]));
      if (ds < margin) return false;
    }
    return true;
  };

  // --- interior points: rows geometric in y so spacing is ~h hyperbolic --
  double xmin = out.points[0][0], xmax = xmin, ymin = out.points[0][1], ymax = ymin;
  for (const auto& p : out.points) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.12, 0.12);
  const double margin = 0.55 * h;
  int row = 0;
  for (double y = ymin * (1.0 - 2.0 * h); y < ymax * (1.0 + 2.0 * h);
       y *= (1.0 + h), ++row) {
    const double dx = y * h;
    const double x0 = xmin - 2.0 * dx + (row % 2) * 0.5 * dx;
    for (double x = x0; x < xmax + 2.0 * dx; x += dx) {
      const Point p(x + jitter(rng) * dx, y * (1.0 + jitter(rng) * h));
      if (inside(p, margin)) add_point(p);
    }
  }

  out.tris = delaunay::triangulate(out.points);

  // keep exactly the triangles filling the boundary chord polygon; a metric
  // inside-test would wrongly keep slivers between a chord and its curved
  // geodesic side
  std::vector<std::array<int, 3>> kept;
  for (const auto& t : out.tris) {
    const Point c((out.points[t[0]][0] + out.points[t[1]][0] + out.points[t[2]][0]) / 3.0,
                  (out.points[t[0]][1] + out.points[t[1]][1] + out.points[t[2]][1]) / 3.0);
    if (inside_polygon(c)) kept.push_back(t);
  }
  out.tris = std::move(kept);

  // every consecutive boundary pair must be an edge of the kept mesh
  std::set<std::pair<int, int>> edges;
  for (const auto& t : out.tris)
    for (int e = 0; e < 3; ++e) {
      auto key = std::minmax(t[e], t[(e + 1) % 3]);
      edges.insert({key.first, key.second});
    }
  auto check_edge = [&](int a, int b) {
    auto key = std::minmax(a, b);
    if (!edges.count({key.first, key.second}))
      throw std::runtime_error("surface: meshing failed to recover a boundary edge");
  };
  for (int i = 0; i < 3; ++i) {
    for (size_t k = 0; k + 1 < out.ring_node[i].size(); ++k)
      check_edge(out.ring_node[i][k], out.ring_node[i][k + 1]);
    for (size_t k = 0; k + 1 < out.seam_node[i].size(); ++k)
      check_edge(out.seam_node[i][k], out.seam_node[i][k + 1]);
  }
  (void)n_boundary;
  return out;
}

}  // namespace

Diagnostics validate(const FNCoordinates& fn) {
  Diagnostics d;
  auto fail = [&](const std::string& m) {
    d.ok = false;
    d.messages.push_back(m);
  };
  const auto& g = fn.graph;
  if (g.n_pants <= 0 || g.n_pants % 2 != 0) fail("pants count must be positive and even");
  if (static_cast<int>(g.curves.size()) != 3 * (g.genus() - 1))
    fail("curve count must be 3(genus-1)");
  if (fn.lengths.size() != g.curves.size()) fail("lengths/curves size mismatch");
  if (fn.twists.size() != g.curves.size()) fail("twists/curves size mismatch");
  for (double l : fn.lengths)
    if (!(l > 0.0)) fail("curve lengths must be positive");

  // every slot used exactly once
  std::map<std::pair<int, int>, int> used;
  for (const auto& c : g.curves) {
    for (const Slot& s : {c.end0, c.end1}) {
      if (s.pants < 0 || s.pants >= g.n_pants || s.slot < 0 || s.slot > 2)
        fail("slot out of range");
      else
        used[{s.pants, s.slot}]++;
    }
    if (c.end0 == c.end1) fail("curve glues a slot to itself");
  }
  for (int p = 0; p < g.n_pants; ++p)
    for (int s = 0; s < 3; ++s) {
      const int n = used.count({p, s}) ? used[{p, s}] : 0;
      if (n == 0) fail("unpaired slot");
      if (n > 1) fail("slot used more than once");
    }

  // connectivity over pants
  if (d.ok && g.n_pants > 0) {
    std::vector<int> seen(g.n_pants, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (const auto& c : g.curves) {
        for (const auto& [a, b] : {std::pair{c.end0, c.end1}, {c.end1, c.end0}}) {
          if (a.pants == p && !seen[b.pants]) {
            seen[b.pants] = 1;
            stack.push_back(b.pants);
          }
        }
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != g.n_pants) fail("pants graph disconnected");
  }
  return d;
}

int SurfaceMesh::euler_characteristic() const {
  // edges interior to a chart (vertex pair seen twice) are never identified
  // by gluing and each count once; chart-boundary edges (seen once) are
  // identified in pairs through their dofs
  std::map<std::pair<int, int>, int> vpair;
  for (const auto& t : triangles)
    for (int e = 0; e < 3; ++e) {
      auto key = std::minmax(t.v[e], t.v[(e + 1) % 3]);
      vpair[{key.first, key.second}]++;
    }
  int n_edges = 0;
  std::map<std::pair<int, int>, int> boundary;
  for (const auto& [key, count] : vpair) {
    if (count >= 2) {
      ++n_edges;
    } else {
      auto dk = std::minmax(vertex_dof[key.first], vertex_dof[key.second]);
      boundary[{dk.first, dk.second}]++;
    }
  }
  for (const auto& [dk, n] : boundary) n_edges += (n + 1) / 2;
  return n_dofs - n_edges + static_cast<int>(triangles.size());
}

std::optional<int> SurfaceMesh::collar_chart_of_curve(int curve) const {
  for (size_t i = 0; i < collar_charts.size(); ++i)
    if (collar_charts[i].curve == curve) return static_cast<int>(i);
  return std::nullopt;
}

SurfaceMesh build_mesh(const FNCoordinates& fn, const MeshParams& params) {
  {
    Diagnostics d = validate(fn);
    if (!d.ok) throw std::invalid_argument("surface: invalid FN coordinates: " + d.messages[0]);
  }
  const int nt = params.n_theta;
  if (nt < 16 || nt % 2 != 0)
    throw std::invalid_argument("surface: n_theta must be even and >= 16");
  if (!(params.delta_cut > 0.0 && params.delta_cut < std::asinh(1.0)))
    throw std::invalid_argument("surface: delta_cut must lie in (0, arsinh(1))");

  const auto& g = fn.graph;
  const int n_curves = static_cast<int>(g.curves.size());

  // twist snapping: twists must be integer multiples of 2 pi / n_theta
  std::vector<int> twist_steps(n_curves);
  for (int j = 0; j < n_curves; ++j) {
    const double quantum = 2.0 * kPi / nt;
    const double steps = fn.twists[j] / quantum;
    twist_steps[j] = static_cast<int>(std::llround(steps));
    if (std::abs(steps - twist_steps[j]) > 1e-9)
      throw std::invalid_argument("surface: twist not representable at this n_theta");
  }

  SurfaceMesh mesh;
  mesh.genus = g.genus();
  mesh.params = params;

  // collar truncation per curve
  std::vector<double> x_cut(n_curves), depth_of_curve(n_curves);
  for (int j = 0; j < n_curves; ++j) {
    x_cut[j] = collar::thin_cut(fn.lengths[j], params.delta_cut);
    depth_of_curve[j] = x_cut[j] > 0.0 ? collar::geodesic_distance(fn.lengths[j], x_cut[j]) : 0.0;
  }

  // --- collar charts -----------------------------------------------------
  for (int j = 0; j < n_curves; ++j) {
    if (x_cut[j] == 0.0) continue;
    const double ell = fn.lengths[j];
    const double rho_end = collar::conformal_factor(ell, x_cut[j]);
    const int n_s = std::max(2, static_cast<int>(std::ceil(2.0 * x_cut[j] * rho_end / params.h)));
    CollarChart cc;
    cc.curve = j;
    cc.ell = ell;
    cc.s_min = -x_cut[j];
    cc.s_max = x_cut[j];
    cc.n_s = n_s;
    cc.n_theta = nt;
    cc.first_vertex = static_cast<int>(mesh.vertices.size());
    const int chart_id = static_cast<int>(mesh.charts.size());
    mesh.charts.push_back({ChartRef::kCollar, static_cast<int>(mesh.collar_charts.size())});
    for (int r = 0; r <= n_s; ++r) {
      const double s = cc.s_min + (cc.s_max - cc.s_min) * r / n_s;
      for (int k = 0; k < nt; ++k) {
        const double theta = 2.0 * kPi * k / nt;
        mesh.vertices.push_back({chart_id, s, theta,
                                 ell / (2.0 * kPi * std::cos(ell * s / (2.0 * kPi)))});
      }
    }
    for (int r = 0; r < n_s; ++r)
      for (int k = 0; k < nt; ++k) {
        const int a = cc.first_vertex + r * nt + k;
        const int b = cc.first_vertex + r * nt + (k + 1) % nt;
        const int c = cc.first_vertex + (r + 1) * nt + (k + 1) % nt;
        const int d = cc.first_vertex + (r + 1) * nt + k;
        mesh.triangles.push_back({{a, d, c}, chart_id});
        mesh.triangles.push_back({{a, c, b}, chart_id});
      }
    mesh.collar_charts.push_back(cc);
  }

  // --- hexagon charts ----------------------------------------------------
  // boundary length and curve of each pants slot
  std::vector<std::array<int, 3>> slot_curve(g.n_pants, {-1, -1, -1});
  for (int j = 0; j < n_curves; ++j) {
    slot_curve[g.curves[j].end0.pants][g.curves[j].end0.slot] = j;
    slot_curve[g.curves[j].end1.pants][g.curves[j].end1.slot] = j;
  }

  // hex chart bookkeeping per pants: [pants][half]
  std::vector<std::array<int, 2>> hex_chart_of_pants(g.n_pants);

  for (int p = 0; p < g.n_pants; ++p) {
    std::array<double, 3> bl;   // boundary lengths
    std::array<double, 3> dep;  // truncation depths
    for (int i = 0; i < 3; ++i) {
      const int j = slot_curve[p][i];
      bl[i] = fn.lengths[j];
      dep[i] = depth_of_curve[j];
    }
    const hexagon::EmbeddedHexagon hex =
        hexagon::embed_hexagon({bl[0] / 2.0, bl[1] / 2.0, bl[2] / 2.0});
    const TruncatedHexMesh hm =
        mesh_truncated_hexagon(hex, dep, nt, params.h, 1234u + 7919u * p);

    for (int half = 0; half < 2; ++half) {
      HexChart hc;
      hc.pants = p;
      hc.half = half;
      hc.first_vertex = static_cast<int>(mesh.vertices.size());
      hc.n_vertices = static_cast<int>(hm.points.size());
      const int chart_id = static_cast<int>(mesh.charts.size());
      mesh.charts.push_back({ChartRef::kHexagon, static_cast<int>(mesh.hex_charts.size())});
      for (const auto& pt : hm.points)
        mesh.vertices.push_back({chart_id, pt[0], pt[1], 1.0 / pt[1]});
      for (const auto& t : hm.tris) {
        Triangle tri;
        tri.chart = chart_id;
        // the mirror half reverses orientation
        if (half == 0)
          tri.v = {hc.first_vertex + t[0], hc.first_vertex + t[1], hc.first_vertex + t[2]};
        else
          tri.v = {hc.first_vertex + t[0], hc.first_vertex + t[2], hc.first_vertex + t[1]};
        mesh.triangles.push_back(tri);
      }
      for (int i = 0; i < 3; ++i) {
        hc.ring_node[i] = hm.ring_node[i];
        hc.seam_node[i] = hm.seam_node[i];
        for (int& v : hc.ring_node[i]) v += hc.first_vertex;
        for (int& v : hc.seam_node[i]) v += hc.first_vertex;
      }
      hex_chart_of_pants[p][half] = static_cast<int>(mesh.hex_charts.size());
      mesh.hex_charts.push_back(hc);
    }
  }

  // --- identifications ---------------------------------------------------
  // seams: the two mirror halves of each pants share their seam nodes
  for (int p = 0; p < g.n_pants; ++p) {
    const HexChart& h0 = mesh.hex_charts[hex_chart_of_pants[p][0]];
    const HexChart& h1 = mesh.hex_charts[hex_chart_of_pants[p][1]];
    for (int i = 0; i < 3; ++i)
      for (size_t m = 0; m < h0.seam_node[i].size(); ++m)
        mesh.identifications.push_back({h0.seam_node[i][m], h1.seam_node[i][m]});
  }

  // full boundary ring of a pants slot: theta index k in [0, n_theta)
  auto pants_ring = [&](int p, int slot, int k) -> int {
    k = mod(k, nt);
    const HexChart& h0 = mesh.hex_charts[hex_chart_of_pants[p][0]];
    const HexChart& h1 = mesh.hex_charts[hex_chart_of_pants[p][1]];
    if (k <= nt / 2) return h0.ring_node[slot][k];
    return h1.ring_node[slot][nt - k];
  };

  for (int j = 0; j < n_curves; ++j) {
    const Slot a = g.curves[j].end0, b = g.curves[j].end1;
    if (x_cut[j] > 0.0) {
      const int ci = *mesh.collar_chart_of_curve(j);
      const CollarChart& cc = mesh.collar_charts[ci];
      for (int k = 0; k < nt; ++k) {
        mesh.identifications.push_back({cc.first_vertex + k, pants_ring(a.pants, a.slot, k)});
        mesh.identifications.push_back(
            {cc.first_vertex + cc.n_s * nt + k,
             pants_ring(b.pants, b.slot, mod(twist_steps[j] - k, nt))});
      }
    } else {
      for (int k = 0; k < nt; ++k)
        mesh.identifications.push_back(
            {pants_ring(a.pants, a.slot, k),
             pants_ring(b.pants, b.slot, mod(twist_steps[j] - k, nt))});
    }
  }

  // --- degrees of freedom and conformity checks --------------------------
  UnionFind uf(static_cast<int>(mesh.vertices.size()));
  for (const auto& id : mesh.identifications) uf.unite(id[0], id[1]);
  std::map<int, int> root_to_dof;
  mesh.vertex_dof.resize(mesh.vertices.size());
  for (size_t v = 0; v < mesh.vertices.size(); ++v) {
    const int r = uf.find(static_cast<int>(v));
    auto [it, fresh] = root_to_dof.try_emplace(r, static_cast<int>(root_to_dof.size()));
    mesh.vertex_dof[v] = it->second;
  }
  mesh.n_dofs = static_cast<int>(root_to_dof.size());

  // closed oriented surface: within each chart every vertex pair appears at
  // most twice and then in opposite directions; chart-boundary edges must be
  // glued in exactly two oppositely directed copies through their dofs
  {
    std::map<std::pair<int, int>, std::pair<int, int>> vpair;  // (fwd, rev)
    for (const auto& t : mesh.triangles)
      for (int e = 0; e < 3; ++e) {
        const int u = t.v[e], v = t.v[(e + 1) % 3];
        auto& c = vpair[std::minmax(u, v)];
        (u < v ? c.first : c.second)++;
      }
    std::map<std::pair<int, int>, std::pair<int, int>> glued;  // dof pair -> (fwd, rev)
    for (const auto& [key, c] : vpair) {
      const int total = c.first + c.second;
      if (total > 2 || (total == 2 && c != std::pair<int, int>{1, 1}))
        throw std::runtime_error("surface: glued mesh is not a consistently oriented closed surface");
      if (total == 1) {
        const int du = mesh.vertex_dof[key.first], dv = mesh.vertex_dof[key.second];
        auto& g = glued[std::minmax(du, dv)];
        const bool fwd = (c.first == 1) == (du < dv);
        (fwd ? g.first : g.second)++;
      }
    }
    for (const auto& [dk, g] : glued)
      if (g != std::pair<int, int>{1, 1})
        throw std::runtime_error("surface: glued mesh is not a consistently oriented closed surface");
  }

  const int chi = mesh.euler_characteristic();
  if (chi != 2 - 2 * mesh.genus)
    throw std::runtime_error("surface: Euler characteristic mismatch after gluing");

  return mesh;
}

CollarGrid collar_restriction(const SurfaceMesh& mesh, int curve) {
  auto ci = mesh.collar_chart_of_curve(curve);
  if (!ci) throw std::out_of_range("surface: curve has no collar chart");
  const CollarChart& cc = mesh.collar_charts[*ci];
  CollarGrid grid;
  grid.n_theta = cc.n_theta;
  grid.first_vertex = cc.first_vertex;
  grid.s.resize(cc.n_s + 1);
  for (int r = 0; r <= cc.n_s; ++r)
    grid.s[r] = cc.s_min + (cc.s_max - cc.s_min) * r / cc.n_s;
  grid.theta.resize(cc.n_theta);
  for (int k = 0; k < cc.n_theta; ++k) grid.theta[k] = 2.0 * kPi * k / cc.n_theta;
  return grid;
}

CylinderMesh build_cylinder_mesh(double ell, double s_max, const MeshParams& params) {
  if (!(s_max > 0.0 && s_max < collar::half_length(ell)))
    throw std::domain_error("surface: cylinder s_max must lie in (0, X(ell))");
  const int nt = params.n_theta;
  if (nt < 16 || nt % 2 != 0)
    throw std::invalid_argument("surface: n_theta must be even and >= 16");
  CylinderMesh out;
  SurfaceMesh& mesh = out.mesh;
  mesh.genus = 0;
  mesh.params = params;
  const double rho_end = collar::conformal_factor(ell, s_max);
  const int n_s = std::max(2, static_cast<int>(std::ceil(2.0 * s_max * rho_end / params.h)));
  CollarChart cc{0, ell, -s_max, s_max, n_s, nt, 0};
  mesh.charts.push_back({ChartRef::kCollar, 0});
  for (int r = 0; r <= n_s; ++r) {
    const double s = -s_max + 2.0 * s_max * r / n_s;
    for (int k = 0; k < nt; ++k)
      mesh.vertices.push_back({0, s, 2.0 * kPi * k / nt,
                               ell / (2.0 * kPi * std::cos(ell * s / (2.0 * kPi)))});
  }
  for (int r = 0; r < n_s; ++r)
    for (int k = 0; k < nt; ++k) {
      const int a = r * nt + k;
      const int b = r * nt + (k + 1) % nt;
      const int c = (r + 1) * nt + (k + 1) % nt;
      const int d = (r + 1) * nt + k;
      mesh.triangles.push_back({{a, d, c}, 0});
      mesh.triangles.push_back({{a, c, b}, 0});
    }
  mesh.collar_charts.push_back(cc);
  mesh.vertex_dof.resize(mesh.vertices.size());
  std::iota(mesh.vertex_dof.begin(), mesh.vertex_dof.end(), 0);
  mesh.n_dofs = static_cast<int>(mesh.vertices.size());
  for (int k = 0; k < nt; ++k) {
    out.boundary_vertices.push_back(k);
    out.boundary_vertices.push_back(n_s * nt + k);
  }
  return out;
}

FNCoordinates genus2_config(double ell1, double other_len, double twist) {
  FNCoordinates fn;
  fn.graph.n_pants = 2;
  fn.graph.curves = {
      {{0, 0}, {1, 0}},  // disconnecting curve sigma^1
      {{0, 1}, {0, 2}},  // handle of pants 0
      {{1, 1}, {1, 2}},  // handle of pants 1
  };
  fn.lengths = {ell1, other_len, other_len};
  fn.twists = {twist, 0.0, 0.0};
  return fn;
}

FNCoordinates genus3_chain_config(double ell1, double ell2, double other_len) {
  FNCoordinates fn;
  fn.graph.n_pants = 4;
  fn.graph.curves = {
      {{0, 0}, {1, 0}},  // sigma^1: splits off the genus-1 piece {P0}
      {{0, 1}, {0, 2}},  // handle of P0
      {{1, 1}, {2, 1}},  // tube 1 between P1 and P2
      {{1, 2}, {2, 2}},  // tube 2 between P1 and P2
      {{2, 0}, {3, 0}},  // sigma^2: splits off the genus-1 piece {P3}
      {{3, 1}, {3, 2}},  // handle of P3
  };
  fn.lengths = {ell1, other_len, other_len, other_len, ell2, other_len};
  fn.twists = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  return fn;
}

}  // namespace hypspec::surface
