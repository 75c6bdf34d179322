#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace chbf {

// IDX container constants: 4-byte big-endian magic, big-endian dimension
// sizes, then the unsigned-byte payload.
inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;  // 2051
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;  // 2049

// Contents of an IDX image file: `count` grayscale images of rows x cols
// bytes each, row-major, concatenated in file order.
struct IdxImages {
  int count = 0;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> data;

  std::span<const std::uint8_t> image(int i) const {
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    return {data.data() + n * i, n};
  }
};

IdxImages parse_idx_images(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes);

IdxImages load_idx_images(const std::filesystem::path& path);
std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace chbf
