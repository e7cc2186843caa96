// Plain 2D Delaunay triangulation (Bowyer-Watson) of a point set in chart
// coordinates.  Used to mesh truncated hexagons; point counts are a few
// thousand, so the simple O(n^2) insertion scan is adequate.

#pragma once

#include <array>
#include <vector>

namespace hypspec::delaunay {

using Point2 = std::array<double, 2>;

// Delaunay triangulation of the convex hull of pts.  Triangles are
// counterclockwise vertex-index triples into pts.  Throws on degenerate
// input (fewer than 3 points, all collinear).
std::vector<std::array<int, 3>> triangulate(const std::vector<Point2>& pts);

}  // namespace hypspec::delaunay
