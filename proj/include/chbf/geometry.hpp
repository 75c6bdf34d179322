#pragma once

#include <optional>
#include <span>
#include <vector>

namespace chbf {

// Integer lattice point in image coordinates: x = column, y = row, with y
// growing downward from the top-left origin.
struct GridPoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Convex polygon as an ordered vertex list, closed implicitly. Hulls built
// by convex_hull() have positive shoelace orientation, start at the
// rightmost-lowest point (max y, then max x), and never contain three
// collinear consecutive vertices.
using Polygon = std::vector<GridPoint>;

struct PointD {
  double x = 0.0;
  double y = 0.0;
};

// Twice the signed area of triangle (o, a, b). Positive when o -> a -> b
// turns in the positive-shoelace direction.
inline long long cross(GridPoint o, GridPoint a, GridPoint b) {
  return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
         static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

// Graham scan over an integer point set. Duplicates are ignored; collinear
// angular ties keep only the farthest point. Returns std::nullopt for
// degenerate inputs (fewer than three distinct points, or all collinear).
std::optional<Polygon> convex_hull(std::vector<GridPoint> points);

// Signed shoelace area in pixels^2; positive for convex_hull() output.
double polygon_area(std::span<const GridPoint> polygon);

// Area centroid. Throws ZeroAreaPolygon when the polygon has no area.
PointD polygon_centroid(std::span<const GridPoint> polygon);

enum class Containment { Outside, OnBoundary, Inside };

// Exact classification of a lattice point against a convex polygon with
// positive orientation. Pure integer arithmetic, no tolerances.
Containment point_in_polygon(GridPoint p, std::span<const GridPoint> hull);

}  // namespace chbf
