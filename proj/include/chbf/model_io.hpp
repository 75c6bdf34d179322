#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "chbf/mlp.hpp"

namespace chbf {

// Self-describing text model format. First line is the version tag, then
// "name value(s)" fields in a fixed order; doubles are written with 17
// significant digits so the round trip is exact.
inline constexpr std::string_view kModelFormatTag = "chbf-mlp-v1";

void save_model(std::ostream& out, const MlpModel& model);
void save_model(const std::filesystem::path& path, const MlpModel& model);

// Throws ModelVersionMismatch on an unknown tag and CorruptModelFile on
// truncation, bad field names or inconsistent shapes.
MlpModel load_model(std::istream& in);
MlpModel load_model(const std::filesystem::path& path);

}  // namespace chbf
