#include "chbf/dataset.hpp"

#include <string>

#include "chbf/errors.hpp"

namespace chbf {

BinaryImage binarize(std::span<const std::uint8_t> gray, int rows, int cols,
                     int threshold) {
  BinaryImage img(cols, rows);
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      if (gray[static_cast<std::size_t>(y) * cols + x] > threshold) {
        img.set(x, y);
      }
    }
  }
  return img;
}

DatasetSplit load_split(const std::filesystem::path& image_path,
                        const std::filesystem::path& label_path,
                        int threshold, std::size_t limit) {
  const IdxImages images = load_idx_images(image_path);
  const std::vector<std::uint8_t> labels = load_idx_labels(label_path);
  if (static_cast<std::size_t>(images.count) != labels.size()) {
    raise(Errc::CountMismatch,
          std::to_string(images.count) + " images vs " +
              std::to_string(labels.size()) + " labels");
  }

  std::size_t n = images.count;
  if (limit > 0 && limit < n) n = limit;

  DatasetSplit split;
  split.provenance = {image_path.string(), label_path.string(), threshold};
  split.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    split.samples.push_back(
        {binarize(images.image(static_cast<int>(i)), images.rows, images.cols,
                  threshold),
         labels[i]});
  }
  return split;
}

}  // namespace chbf
