#pragma once

// Independent oracles for the geometry implementation. Everything here is
// written from scratch against the definitions, not by calling the library
// code it checks: brute-force extreme points, an even-odd crossing test,
// lattice-count area and triangle-fan area/centroid.

#include <random>
#include <set>
#include <span>
#include <vector>

#include "chbf/geometry.hpp"

namespace oracle {

using chbf::Containment;
using chbf::GridPoint;
using chbf::PointD;

long long cross3(GridPoint a, GridPoint b, GridPoint p);
bool on_segment(GridPoint a, GridPoint b, GridPoint p);

// p contained (boundary included) in triangle (a, b, c); the triple may be
// degenerate, in which case containment means lying on the spanned segment.
bool in_triangle(GridPoint a, GridPoint b, GridPoint c, GridPoint p);

// Brute force O(n^4): a point is a hull vertex iff no segment or triangle
// of other points contains it.
std::set<GridPoint> extreme_points(std::span<const GridPoint> points);

// Even-odd crossing-number classification with an explicit edge test; works
// for any simple polygon and uses only integer arithmetic.
Containment crossing_containment(GridPoint p, std::span<const GridPoint> poly);

// Lattice enumeration + Pick's theorem: interior + boundary/2 - 1. Exact
// for simple lattice polygons.
double pick_area(std::span<const GridPoint> poly);

// Triangle-fan decomposition from the first vertex.
double fan_area(std::span<const GridPoint> poly);
PointD fan_centroid(std::span<const GridPoint> poly);

// Integer affine map with det != 0, for equivariance checks.
struct AffineMap {
  int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  int tx = 0, ty = 0;

  GridPoint apply(GridPoint p) const {
    return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
  }
  PointD apply(PointD p) const {
    return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
  }
  int det() const { return m00 * m11 - m01 * m10; }
};

AffineMap random_affine(std::mt19937_64& rng);

}  // namespace oracle
