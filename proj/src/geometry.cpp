#include "chbf/geometry.hpp"

#include <algorithm>
#include <utility>

#include "chbf/errors.hpp"

namespace chbf {

namespace {

long long sq_dist(GridPoint a, GridPoint b) {
  const long long dx = a.x - b.x;
  const long long dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

std::optional<Polygon> convex_hull(std::vector<GridPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return std::nullopt;

  // Anchor at the rightmost-lowest point: max row, then max column.
  auto anchor = std::max_element(
      points.begin(), points.end(), [](GridPoint a, GridPoint b) {
        return std::pair(a.y, a.x) < std::pair(b.y, b.x);
      });
  std::iter_swap(points.begin(), anchor);
  const GridPoint p0 = points.front();

  // Angular sort about the anchor. Every other point lies in the half plane
  // y <= p0.y, so a single cross-product comparator gives a strict order;
  // distance breaks exact-angle ties.
  std::sort(points.begin() + 1, points.end(), [&](GridPoint a, GridPoint b) {
    const long long c = cross(p0, a, b);
    if (c != 0) return c > 0;
    return sq_dist(p0, a) < sq_dist(p0, b);
  });

  // For angular ties, discard the closer points.
  std::vector<GridPoint> order;
  order.reserve(points.size());
  order.push_back(p0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    while (i + 1 < points.size() && cross(p0, points[i], points[i + 1]) == 0) {
      ++i;
    }
    order.push_back(points[i]);
  }
  if (order.size() < 3) return std::nullopt;  // input set is collinear

  Polygon hull{order[0], order[1]};
  for (std::size_t i = 2; i < order.size(); ++i) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), order[i]) <= 0) {
      hull.pop_back();
    }
    hull.push_back(order[i]);
  }
  return hull;
}

double polygon_area(std::span<const GridPoint> polygon) {
  long long twice = 0;  // 2A is integral for lattice vertices
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GridPoint a = polygon[i];
    const GridPoint b = polygon[(i + 1) % n];
    twice += static_cast<long long>(a.x) * b.y -
             static_cast<long long>(b.x) * a.y;
  }
  return 0.5 * static_cast<double>(twice);
}

PointD polygon_centroid(std::span<const GridPoint> polygon) {
  long long twice_area = 0;
  long long sx = 0;
  long long sy = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GridPoint a = polygon[i];
    const GridPoint b = polygon[(i + 1) % n];
    const long long w =
        static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
    twice_area += w;
    sx += (a.x + b.x) * w;
    sy += (a.y + b.y) * w;
  }
  if (twice_area == 0) {
    raise(Errc::ZeroAreaPolygon, "polygon encloses no area");
  }
  const double six_a = 3.0 * static_cast<double>(twice_area);
  return {static_cast<double>(sx) / six_a, static_cast<double>(sy) / six_a};
}

Containment point_in_polygon(GridPoint p, std::span<const GridPoint> hull) {
  bool on_edge = false;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const long long c = cross(hull[i], hull[(i + 1) % n], p);
    if (c < 0) return Containment::Outside;
    if (c == 0) on_edge = true;
  }
  return on_edge ? Containment::OnBoundary : Containment::Inside;
}

}  // namespace chbf
