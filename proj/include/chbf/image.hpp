#pragma once

#include <cstdint>
#include <vector>

#include "chbf/geometry.hpp"

namespace chbf {

// Binary raster of a digit pattern. Row-major; pixel (x, y) addresses
// column x of row y, origin at the top-left.
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 0 = background, 1 = object

  BinaryImage() = default;
  BinaryImage(int w, int h)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  void set(int x, int y, std::uint8_t v = 1) {
    pixels[static_cast<std::size_t>(y) * width + x] = v;
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  std::vector<GridPoint> object_points() const {
    std::vector<GridPoint> pts;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        if (at(x, y)) pts.push_back({x, y});
      }
    }
    return pts;
  }

  int object_count() const {
    int n = 0;
    for (std::uint8_t p : pixels) n += p != 0;
    return n;
  }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;
};

}  // namespace chbf
