#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chbf/features.hpp"
#include "chbf/image.hpp"

namespace chbf {

struct ExtractStats {
  std::size_t images = 0;
  std::size_t degenerate_hulls = 0;  // images whose global hull collapsed
};

// Feature extraction over a batch of images. Per-image extraction is pure,
// so the OpenMP version partitions the sample range and writes results in
// index order; its output is identical to the serial reference for any
// thread count.
std::vector<FeatureVector> extract_features(std::span<const BinaryImage> images,
                                            ExtractStats* stats = nullptr);

// Serial reference implementation, kept for testing and benchmarking.
std::vector<FeatureVector> extract_features_serial(
    std::span<const BinaryImage> images, ExtractStats* stats = nullptr);

}  // namespace chbf
