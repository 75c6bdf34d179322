#include "oracles.hpp"

#include <algorithm>

namespace oracle {

long long cross3(GridPoint a, GridPoint b, GridPoint p) {
  return static_cast<long long>(b.x - a.x) * (p.y - a.y) -
         static_cast<long long>(b.y - a.y) * (p.x - a.x);
}

bool on_segment(GridPoint a, GridPoint b, GridPoint p) {
  if (cross3(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool in_triangle(GridPoint a, GridPoint b, GridPoint c, GridPoint p) {
  if (cross3(a, b, c) == 0) {
    // Degenerate triple: containment means lying on the spanned segment,
    // whose endpoints are the lexicographic extremes.
    const GridPoint lo = std::min({a, b, c});
    const GridPoint hi = std::max({a, b, c});
    return on_segment(lo, hi, p);
  }
  const long long d1 = cross3(a, b, p);
  const long long d2 = cross3(b, c, p);
  const long long d3 = cross3(c, a, p);
  const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

std::set<GridPoint> extreme_points(std::span<const GridPoint> points) {
  std::vector<GridPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::set<GridPoint> extremes;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GridPoint p = pts[i];
    std::vector<GridPoint> others;
    others.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    bool contained = false;
    for (std::size_t a = 0; a < others.size() && !contained; ++a) {
      for (std::size_t b = a + 1; b < others.size() && !contained; ++b) {
        if (on_segment(others[a], others[b], p)) contained = true;
      }
    }
    for (std::size_t a = 0; a < others.size() && !contained; ++a) {
      for (std::size_t b = a + 1; b < others.size() && !contained; ++b) {
        for (std::size_t c = b + 1; c < others.size() && !contained; ++c) {
          if (in_triangle(others[a], others[b], others[c], p)) contained = true;
        }
      }
    }
    if (!contained) extremes.insert(p);
  }
  return extremes;
}

Containment crossing_containment(GridPoint p, std::span<const GridPoint> poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(poly[i], poly[(i + 1) % n], p)) {
      return Containment::OnBoundary;
    }
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const GridPoint a = poly[i];
    const GridPoint b = poly[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      // Ray towards +x crosses edge (a, b) iff p.x < x(intersection);
      // compare exactly with cross-multiplied integers.
      const long long lhs = static_cast<long long>(p.x - a.x) * (b.y - a.y);
      const long long rhs = static_cast<long long>(p.y - a.y) * (b.x - a.x);
      const bool crosses = (b.y > a.y) ? (lhs < rhs) : (lhs > rhs);
      if (crosses) inside = !inside;
    }
  }
  return inside ? Containment::Inside : Containment::Outside;
}

double pick_area(std::span<const GridPoint> poly) {
  int min_x = poly[0].x, max_x = poly[0].x;
  int min_y = poly[0].y, max_y = poly[0].y;
  for (const GridPoint v : poly) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  long long interior = 0;
  long long boundary = 0;
  for (int y = min_y; y <= max_y; ++y) {
    for (int x = min_x; x <= max_x; ++x) {
      switch (crossing_containment({x, y}, poly)) {
        case Containment::Inside: ++interior; break;
        case Containment::OnBoundary: ++boundary; break;
        case Containment::Outside: break;
      }
    }
  }
  return static_cast<double>(interior) + static_cast<double>(boundary) / 2.0 - 1.0;
}

double fan_area(std::span<const GridPoint> poly) {
  double area = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    area += 0.5 * static_cast<double>(cross3(poly[0], poly[i], poly[i + 1]));
  }
  return area;
}

PointD fan_centroid(std::span<const GridPoint> poly) {
  double area_sum = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const double a = 0.5 * static_cast<double>(cross3(poly[0], poly[i], poly[i + 1]));
    area_sum += a;
    cx += a * (poly[0].x + poly[i].x + poly[i + 1].x) / 3.0;
    cy += a * (poly[0].y + poly[i].y + poly[i + 1].y) / 3.0;
  }
  return {cx / area_sum, cy / area_sum};
}

AffineMap random_affine(std::mt19937_64& rng) {
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  AffineMap map;
  do {
    map.m00 = draw(-3, 3);
    map.m01 = draw(-3, 3);
    map.m10 = draw(-3, 3);
    map.m11 = draw(-3, 3);
  } while (map.det() == 0);
  map.tx = draw(-10, 10);
  map.ty = draw(-10, 10);
  return map;
}

}  // namespace oracle
