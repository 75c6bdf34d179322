#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "chbf/features.hpp"

namespace chbf {

// Plain-text feature matrix: a '#' header carrying the layout tag, then one
// space-separated row per sample: label followed by the 125 features.
struct FeatureSet {
  std::vector<FeatureVector> features;
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
  // Feature rows as generic vectors (for normalization fitting).
  std::vector<std::vector<double>> rows() const;
};

void write_feature_file(std::ostream& out, const FeatureSet& set);
void write_feature_file(const std::filesystem::path& path, const FeatureSet& set);

// Throws LayoutVersionMismatch when the header tag differs from this
// build's layout and ParseError on malformed rows.
FeatureSet read_feature_file(std::istream& in);
FeatureSet read_feature_file(const std::filesystem::path& path);

}  // namespace chbf
