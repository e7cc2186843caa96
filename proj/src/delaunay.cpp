#include "hypspec/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hypspec::delaunay {

namespace {

struct Tri {
  int v[3];
  bool alive = true;
  // cached circumcircle
  double cx, cy, r2;
};

double orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

void circumcircle(const Point2& a, const Point2& b, const Point2& c, Tri& t) {
  const double d = 2.0 * orient(a, b, c);
  const double a2 = a[0] * a[0] + a[1] * a[1];
  const double b2 = b[0] * b[0] + b[1] * b[1];
  const double c2 = c[0] * c[0] + c[1] * c[1];
  t.cx = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d;
  t.cy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d;
  const double dx = a[0] - t.cx, dy = a[1] - t.cy;
  t.r2 = dx * dx + dy * dy;
}

}  // namespace

std::vector<std::array<int, 3>> triangulate(const std::vector<Point2>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw std::invalid_argument("delaunay: need at least 3 points");

  // bounding super-triangle
  double xmin = pts[0][0], xmax = xmin, ymin = pts[0][1], ymax = ymin;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  const double span = std::max(xmax - xmin, ymax - ymin) + 1.0;
  const double mx = 0.5 * (xmin + xmax), my = 0.5 * (ymin + ymax);
  std::vector<Point2> all = pts;
  all.push_back({mx - 20.0 * span, my - 10.0 * span});
  all.push_back({mx + 20.0 * span, my - 10.0 * span});
  all.push_back({mx, my + 20.0 * span});

  std::vector<Tri> tris;
  {
    Tri t{{n, n + 1, n + 2}};
    circumcircle(all[n], all[n + 1], all[n + 2], t);
    tris.push_back(t);
  }

  std::vector<int> bad;
  std::map<std::pair<int, int>, int> edge_count;
  for (int ip = 0; ip < n; ++ip) {
    const Point2& p = all[ip];
    bad.clear();
    for (int it = 0; it < static_cast<int>(tris.size()); ++it) {
      if (!tris[it].alive) continue;
      const double dx = p[0] - tris[it].cx, dy = p[1] - tris[it].cy;
      if (dx * dx + dy * dy <= tris[it].r2 * (1.0 + 1e-12)) bad.push_back(it);
    }
    // cavity boundary: edges appearing once among bad triangles
    edge_count.clear();
    for (int it : bad) {
      for (int e = 0; e < 3; ++e) {
        int u = tris[it].v[e], v = tris[it].v[(e + 1) % 3];
        auto key = std::minmax(u, v);
        edge_count[{key.first, key.second}]++;
      }
      tris[it].alive = false;
    }
    for (int it : bad) {
      for (int e = 0; e < 3; ++e) {
        int u = tris[it].v[e], v = tris[it].v[(e + 1) % 3];
        auto key = std::minmax(u, v);
        if (edge_count[{key.first, key.second}] != 1) continue;
        Tri t{{u, v, ip}};
        if (orient(all[u], all[v], all[ip]) < 0.0) std::swap(t.v[0], t.v[1]);
        circumcircle(all[t.v[0]], all[t.v[1]], all[t.v[2]], t);
        tris.push_back(t);
      }
    }
  }

  std::vector<std::array<int, 3>> out;
  for (const auto& t : tris) {
    if (!t.alive) continue;
    if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;
    out.push_back({t.v[0], t.v[1], t.v[2]});
  }
  if (out.empty()) throw std::runtime_error("delaunay: degenerate point set");
  return out;
}

}  // namespace hypspec::delaunay
