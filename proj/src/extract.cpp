#include "chbf/extract.hpp"

#include <cstdint>
#include <exception>
#include <numeric>
#include <string>

#include "chbf/errors.hpp"

namespace chbf {

namespace {

void finish_stats(ExtractStats* stats, std::size_t n,
                  const std::vector<std::uint8_t>& degenerate) {
  if (!stats) return;
  stats->images = n;
  stats->degenerate_hulls =
      std::accumulate(degenerate.begin(), degenerate.end(), std::size_t{0});
}

}  // namespace

std::vector<FeatureVector> extract_features(std::span<const BinaryImage> images,
                                            ExtractStats* stats) {
  const std::int64_t n = static_cast<std::int64_t>(images.size());
  std::vector<FeatureVector> out(images.size());
  std::vector<std::uint8_t> degenerate(images.size(), 0);

  // Exceptions cannot unwind out of the parallel region; remember the first
  // failing sample and rethrow afterwards.
  std::exception_ptr failure = nullptr;
  std::int64_t failed_index = -1;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      bool flag = false;
      out[i] = extract_feature_vector(images[i], &flag);
      degenerate[i] = flag;
    } catch (...) {
#pragma omp critical
      {
        if (!failure || i < failed_index) {
          failure = std::current_exception();
          failed_index = i;
        }
      }
    }
  }
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const ChbfError& e) {
      raise(e.code(), "sample " + std::to_string(failed_index) + ": " + e.what());
    }
  }
  finish_stats(stats, images.size(), degenerate);
  return out;
}

std::vector<FeatureVector> extract_features_serial(
    std::span<const BinaryImage> images, ExtractStats* stats) {
  std::vector<FeatureVector> out(images.size());
  std::vector<std::uint8_t> degenerate(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    try {
      bool flag = false;
      out[i] = extract_feature_vector(images[i], &flag);
      degenerate[i] = flag;
    } catch (const ChbfError& e) {
      raise(e.code(), "sample " + std::to_string(i) + ": " + e.what());
    }
  }
  finish_stats(stats, images.size(), degenerate);
  return out;
}

}  // namespace chbf
