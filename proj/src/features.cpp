#include "chbf/features.hpp"

#include <algorithm>
#include <cmath>

#include "chbf/errors.hpp"

namespace chbf {

namespace {

FeatureBlock block_from_map(const DeficiencyMap& map) {
  FeatureBlock block{};
  int k = 0;
  for (ScanDirection dir : kScanOrder) {
    const auto f = scan_direction(map, dir).as_array();
    std::copy(f.begin(), f.end(), block.begin() + k);
    k += 6;
  }
  block[kBlockDim - 1] = perimeter_contact_count(map);
  return block;
}

}  // namespace

FeatureBlock extract_global_block(const BinaryImage& img) {
  const auto map = build_deficiency_map(img);
  if (!map) return FeatureBlock{};
  return block_from_map(*map);
}

std::array<BinaryImage, 4> split_quadrants(const BinaryImage& img,
                                           PointD centroid) {
  const int cx = static_cast<int>(std::ceil(centroid.x));
  const int cy = static_cast<int>(std::ceil(centroid.y));
  std::array<BinaryImage, 4> quads{
      BinaryImage(img.width, img.height), BinaryImage(img.width, img.height),
      BinaryImage(img.width, img.height), BinaryImage(img.width, img.height)};
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if (!img.at(x, y)) continue;
      const int q = (y < cy ? 0 : 2) + (x < cx ? 0 : 1);
      quads[q].set(x, y);
    }
  }
  return quads;
}

FeatureVector extract_feature_vector(const BinaryImage& img, bool* degenerate) {
  FeatureVector fv{};
  if (degenerate) *degenerate = false;
  const auto map = build_deficiency_map(img);
  if (!map) {
    if (img.object_count() == 0) {
      raise(Errc::EmptyImage, "image has no object pixels");
    }
    if (degenerate) *degenerate = true;
    return fv;  // degenerate global hull: zero vector
  }

  const FeatureBlock global = block_from_map(*map);
  std::copy(global.begin(), global.end(), fv.begin());

  const PointD centroid = polygon_centroid(map->hull);
  const auto quads = split_quadrants(img, centroid);
  for (int q = 0; q < 4; ++q) {
    const FeatureBlock block = extract_global_block(quads[q]);
    std::copy(block.begin(), block.end(), fv.begin() + kBlockDim * (q + 1));
  }
  return fv;
}

}  // namespace chbf
