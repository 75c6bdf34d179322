#pragma once

#include <array>
#include <string_view>

#include "chbf/deficiency.hpp"
#include "chbf/image.hpp"

namespace chbf {

inline constexpr int kBlockDim = 25;
inline constexpr int kFeatureDim = 125;

// Frozen feature layout, versioned for file interoperability.
//
//   block 0      whole image
//   blocks 1-4   quadrants around the hull centroid, in order
//                top-left, top-right, bottom-left, bottom-right
//
// Within each 25-entry block: the six bay attributes f1..f6 for the scan
// directions left, right, top, bottom (6 x 4 = 24), then the hull-perimeter
// contact count.
inline constexpr std::string_view kFeatureLayoutTag = "chbf125.v1";

using FeatureBlock = std::array<double, kBlockDim>;
using FeatureVector = std::array<double, kFeatureDim>;

// 25 bay features of one image. All zeros when the image has no object
// pixels or their hull is degenerate.
FeatureBlock extract_global_block(const BinaryImage& img);

// Splits object pixels into four sub-images around ceil(centroid): pixels
// with x >= ceil(cx) go right, y >= ceil(cy) go bottom. Sub-images keep the
// original frame; out-of-quadrant pixels are cleared, nothing is cropped.
std::array<BinaryImage, 4> split_quadrants(const BinaryImage& img,
                                           PointD centroid);

// Full 125-feature vector: global block then the four quadrant blocks.
// Quadrants with no usable hull contribute zero blocks; a degenerate global
// hull zeroes the whole vector. Throws EmptyImage when the image has no
// object pixel at all. Sets *degenerate when given.
FeatureVector extract_feature_vector(const BinaryImage& img,
                                     bool* degenerate = nullptr);

}  // namespace chbf
