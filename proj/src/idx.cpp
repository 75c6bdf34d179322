#include "chbf/idx.hpp"

#include <fstream>
#include <string>

#include "chbf/errors.hpp"

namespace chbf {

namespace {

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t at) {
  return (static_cast<std::uint32_t>(bytes[at]) << 24) |
         (static_cast<std::uint32_t>(bytes[at + 1]) << 16) |
         (static_cast<std::uint32_t>(bytes[at + 2]) << 8) |
         static_cast<std::uint32_t>(bytes[at + 3]);
}

}  // namespace

IdxImages parse_idx_images(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) {
    raise(Errc::TruncatedFile, "IDX image stream shorter than its magic");
  }
  const std::uint32_t magic = read_be32(bytes, 0);
  if (magic != kIdxImageMagic) {
    raise(Errc::BadMagic, "expected image magic 2051, got " + std::to_string(magic));
  }
  if (bytes.size() < 16) {
    raise(Errc::TruncatedFile, "IDX image header needs 16 bytes");
  }
  IdxImages out;
  out.count = static_cast<int>(read_be32(bytes, 4));
  out.rows = static_cast<int>(read_be32(bytes, 8));
  out.cols = static_cast<int>(read_be32(bytes, 12));
  if (out.count < 0 || out.rows <= 0 || out.cols <= 0) {
    raise(Errc::DimensionMismatch, "nonsensical IDX image dimensions");
  }
  const std::size_t expected =
      static_cast<std::size_t>(out.count) * out.rows * out.cols;
  const std::size_t payload = bytes.size() - 16;
  if (payload < expected) {
    raise(Errc::TruncatedFile,
          "IDX payload has " + std::to_string(payload) + " bytes, header promises " +
              std::to_string(expected));
  }
  if (payload > expected) {
    raise(Errc::DimensionMismatch,
          "IDX payload has " + std::to_string(payload) + " bytes, header promises " +
              std::to_string(expected));
  }
  out.data.assign(bytes.begin() + 16, bytes.end());
  return out;
}

std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) {
    raise(Errc::TruncatedFile, "IDX label stream shorter than its magic");
  }
  const std::uint32_t magic = read_be32(bytes, 0);
  if (magic != kIdxLabelMagic) {
    raise(Errc::BadMagic, "expected label magic 2049, got " + std::to_string(magic));
  }
  if (bytes.size() < 8) {
    raise(Errc::TruncatedFile, "IDX label header needs 8 bytes");
  }
  const std::uint32_t count = read_be32(bytes, 4);
  const std::size_t payload = bytes.size() - 8;
  if (payload < count) {
    raise(Errc::TruncatedFile,
          "IDX label payload has " + std::to_string(payload) + " bytes, header promises " +
              std::to_string(count));
  }
  if (payload > count) {
    raise(Errc::DimensionMismatch,
          "IDX label payload has " + std::to_string(payload) + " bytes, header promises " +
              std::to_string(count));
  }
  return {bytes.begin() + 8, bytes.end()};
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(Errc::FileNotFound, "cannot open " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

IdxImages load_idx_images(const std::filesystem::path& path) {
  try {
    return parse_idx_images(read_file_bytes(path));
  } catch (const ChbfError& e) {
    if (e.code() == Errc::FileNotFound) throw;
    raise(e.code(), path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path& path) {
  try {
    return parse_idx_labels(read_file_bytes(path));
  } catch (const ChbfError& e) {
    if (e.code() == Errc::FileNotFound) throw;
    raise(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace chbf
