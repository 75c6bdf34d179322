#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "chbf/idx.hpp"
#include "chbf/image.hpp"

namespace chbf {

inline constexpr int kDefaultThreshold = 127;

struct LabeledSample {
  BinaryImage image;
  int label = 0;  // digit class 0-9
};

struct Provenance {
  std::string image_path;
  std::string label_path;
  int threshold = kDefaultThreshold;
};

struct DatasetSplit {
  std::vector<LabeledSample> samples;
  Provenance provenance;
};

// Thresholds a grayscale grid: object iff gray > threshold.
BinaryImage binarize(std::span<const std::uint8_t> gray, int rows, int cols,
                     int threshold);

// Loads images and labels zipped in file order. limit = 0 loads everything;
// otherwise the first `limit` samples. Throws CountMismatch when the two
// files disagree on sample count.
DatasetSplit load_split(const std::filesystem::path& image_path,
                        const std::filesystem::path& label_path,
                        int threshold = kDefaultThreshold,
                        std::size_t limit = 0);

}  // namespace chbf
