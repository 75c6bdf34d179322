#include "chbf/feature_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "chbf/errors.hpp"

namespace chbf {

std::vector<std::vector<double>> FeatureSet::rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(features.size());
  for (const FeatureVector& fv : features) {
    out.emplace_back(fv.begin(), fv.end());
  }
  return out;
}

void write_feature_file(std::ostream& out, const FeatureSet& set) {
  out << std::setprecision(17);
  out << "# layout=" << kFeatureLayoutTag << " dim=" << kFeatureDim
      << " count=" << set.size() << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << set.labels[i];
    for (const double v : set.features[i]) out << ' ' << v;
    out << '\n';
  }
}

void write_feature_file(const std::filesystem::path& path, const FeatureSet& set) {
  std::ofstream out(path);
  if (!out) raise(Errc::FileNotFound, "cannot write " + path.string());
  write_feature_file(out, set);
  if (!out) raise(Errc::FileNotFound, "short write to " + path.string());
}

FeatureSet read_feature_file(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    raise(Errc::ParseError, "empty feature file");
  }
  const std::string expected =
      "# layout=" + std::string(kFeatureLayoutTag) + " dim=" +
      std::to_string(kFeatureDim) + " ";
  if (header.rfind(expected, 0) != 0) {
    raise(Errc::LayoutVersionMismatch,
          "feature file header '" + header + "' does not carry layout " +
              std::string(kFeatureLayoutTag));
  }

  FeatureSet set;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    int label = 0;
    if (!(row >> label)) {
      raise(Errc::ParseError, "line " + std::to_string(lineno) + ": bad label");
    }
    FeatureVector fv{};
    for (int i = 0; i < kFeatureDim; ++i) {
      if (!(row >> fv[i])) {
        raise(Errc::ParseError, "line " + std::to_string(lineno) + ": row has fewer than " +
                                    std::to_string(kFeatureDim) + " features");
      }
    }
    double extra = 0.0;
    if (row >> extra) {
      raise(Errc::ParseError, "line " + std::to_string(lineno) + ": row has more than " +
                                  std::to_string(kFeatureDim) + " features");
    }
    set.labels.push_back(label);
    set.features.push_back(fv);
  }
  return set;
}

FeatureSet read_feature_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::FileNotFound, "cannot open " + path.string());
  try {
    return read_feature_file(in);
  } catch (const ChbfError& e) {
    raise(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace chbf
