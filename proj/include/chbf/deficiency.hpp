#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chbf/geometry.hpp"
#include "chbf/image.hpp"

namespace chbf {

enum class CellLabel : std::uint8_t { Background = 0, Object = 1, Deficiency = 2 };

// Per-pixel classification of an image against the convex hull of its
// object pixels. Deficiency cells are the convexity deficit: inside or on
// the hull but not object (bays and lakes alike). The boundary mask holds
// the hull outline rasterized with integer line segments.
struct DeficiencyMap {
  int width = 0;
  int height = 0;
  Polygon hull;
  std::vector<CellLabel> labels;            // row-major
  std::vector<std::uint8_t> boundary_mask;  // row-major, 1 = hull outline

  CellLabel label_at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
  bool on_boundary(int x, int y) const {
    return boundary_mask[static_cast<std::size_t>(y) * width + x] != 0;
  }
  // Inside or on the hull, i.e. not background.
  bool in_hull(int x, int y) const {
    return label_at(x, y) != CellLabel::Background;
  }
  std::vector<GridPoint> boundary_pixels() const;
};

enum class ScanDirection { Left, Right, Top, Bottom };

inline constexpr std::array<ScanDirection, 4> kScanOrder = {
    ScanDirection::Left, ScanDirection::Right, ScanDirection::Top,
    ScanDirection::Bottom};

// Six bay attributes seen from one side. A scan line is a row for
// Left/Right and a column for Top/Bottom; d_cp is the number of cells from
// the hull entry cell to the first object pixel on that line (the full
// chord length when the line meets no object pixel).
struct DirectionalBayFeatures {
  int max_dcp = 0;               // f1
  int positive_lines = 0;        // f2: lines with d_cp > 0
  double mean_dcp = 0.0;         // f3: mean d_cp over positive lines
  double mean_line_index = 0.0;  // f4: mean line index over positive lines
  int zero_lines = 0;            // f5: lines with d_cp = 0
  int bay_runs = 0;              // f6: maximal runs of consecutive positive lines

  std::array<double, 6> as_array() const {
    return {static_cast<double>(max_dcp), static_cast<double>(positive_lines),
            mean_dcp, mean_line_index, static_cast<double>(zero_lines),
            static_cast<double>(bay_runs)};
  }
  friend bool operator==(const DirectionalBayFeatures&,
                         const DirectionalBayFeatures&) = default;
};

// Labels every pixel of the image against the hull of its object pixels.
// Returns std::nullopt when there is no hull to build: no object pixels at
// all, or fewer than three non-collinear ones.
std::optional<DeficiencyMap> build_deficiency_map(const BinaryImage& img);

DirectionalBayFeatures scan_direction(const DeficiencyMap& map, ScanDirection dir);

// Number of rasterized hull-outline pixels that are object pixels, i.e.
// perimeter positions with d_cp = 0.
int perimeter_contact_count(const DeficiencyMap& map);

// Text render, one row per line: '1' hull outline, '2' object,
// '+' deficiency, '0' background.
std::string render_deficiency_map(const DeficiencyMap& map);

}  // namespace chbf
