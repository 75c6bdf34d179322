#pragma once

// Test fixtures: in-memory IDX builders, random blob images and a small
// synthetic digit dataset used for end-to-end runs.

#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "chbf/image.hpp"

namespace fixtures {

// IDX byte streams built by hand (big-endian header + payload).
std::vector<std::uint8_t> idx_image_bytes(
    const std::vector<std::vector<std::uint8_t>>& grids, int rows, int cols);
std::vector<std::uint8_t> idx_label_bytes(const std::vector<std::uint8_t>& labels);

void write_bytes(const std::filesystem::path& path,
                 const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> slurp(const std::filesystem::path& path);

// Random blobby binary image: union of rectangles and a disc, minus a
// cavity rectangle, plus salt pixels. Guaranteed to have at least three
// non-collinear object pixels (checked independently of the library).
chbf::BinaryImage random_blob(std::mt19937_64& rng, int width, int height);

// True iff the object pixels admit a proper hull: at least three of them
// and not all collinear. Implemented locally, not via the library.
bool has_proper_hull(const chbf::BinaryImage& img);

// Seven-segment style digit glyph with jittered position, size, stroke
// thickness and a few flipped pixels; 28x28 grayscale (0 or 255).
std::vector<std::uint8_t> render_digit_gray(int digit, std::mt19937_64& rng);

// Writes train/test IDX pairs of synthetic digits under dir; file names
// mirror the canonical ones (train-images-idx3-ubyte, ...).
struct SyntheticDataset {
  std::filesystem::path train_images, train_labels;
  std::filesystem::path test_images, test_labels;
};
SyntheticDataset write_synthetic_digits(const std::filesystem::path& dir,
                                        int train_count, int test_count,
                                        std::uint64_t seed);

}  // namespace fixtures
