#include "chbf/deficiency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace chbf {

namespace {

template <typename Plot>
void rasterize_segment(GridPoint a, GridPoint b, Plot&& plot) {
  int x = a.x;
  int y = a.y;
  const int dx = std::abs(b.x - a.x);
  const int dy = -std::abs(b.y - a.y);
  const int sx = a.x < b.x ? 1 : -1;
  const int sy = a.y < b.y ? 1 : -1;
  int err = dx + dy;
  while (true) {
    plot(x, y);
    if (x == b.x && y == b.y) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y += sy;
    }
  }
}

}  // namespace

std::vector<GridPoint> DeficiencyMap::boundary_pixels() const {
  std::vector<GridPoint> pts;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (on_boundary(x, y)) pts.push_back({x, y});
    }
  }
  return pts;
}

std::optional<DeficiencyMap> build_deficiency_map(const BinaryImage& img) {
  const std::vector<GridPoint> object = img.object_points();
  if (object.empty()) return std::nullopt;
  std::optional<Polygon> hull = convex_hull(object);
  if (!hull) return std::nullopt;

  DeficiencyMap map;
  map.width = img.width;
  map.height = img.height;
  map.hull = std::move(*hull);
  map.labels.resize(static_cast<std::size_t>(img.width) * img.height);
  map.boundary_mask.assign(map.labels.size(), 0);

  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      CellLabel label;
      if (img.at(x, y)) {
        label = CellLabel::Object;
      } else if (point_in_polygon({x, y}, map.hull) != Containment::Outside) {
        label = CellLabel::Deficiency;
      } else {
        label = CellLabel::Background;
      }
      map.labels[static_cast<std::size_t>(y) * img.width + x] = label;
    }
  }

  const std::size_t n = map.hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    rasterize_segment(map.hull[i], map.hull[(i + 1) % n], [&](int x, int y) {
      map.boundary_mask[static_cast<std::size_t>(y) * map.width + x] = 1;
    });
  }
  return map;
}

DirectionalBayFeatures scan_direction(const DeficiencyMap& map,
                                      ScanDirection dir) {
  const bool horizontal =
      dir == ScanDirection::Left || dir == ScanDirection::Right;
  const int line_count = horizontal ? map.height : map.width;
  const int depth = horizontal ? map.width : map.height;

  auto label = [&](int line, int t) {
    switch (dir) {
      case ScanDirection::Left: return map.label_at(t, line);
      case ScanDirection::Right: return map.label_at(map.width - 1 - t, line);
      case ScanDirection::Top: return map.label_at(line, t);
      default: return map.label_at(line, map.height - 1 - t);
    }
  };

  DirectionalBayFeatures f;
  long long dcp_sum = 0;
  long long index_sum = 0;
  bool in_run = false;
  for (int line = 0; line < line_count; ++line) {
    int entry = -1;
    for (int t = 0; t < depth; ++t) {
      if (label(line, t) != CellLabel::Background) {
        entry = t;
        break;
      }
    }
    if (entry < 0) {
      in_run = false;  // line does not meet the hull
      continue;
    }
    int t = entry;
    for (; t < depth; ++t) {
      const CellLabel l = label(line, t);
      if (l == CellLabel::Object) break;       // d_cp cells of deficiency
      if (l == CellLabel::Background) break;   // chord ended with no object
    }
    const int dcp = t - entry;
    if (dcp > 0) {
      ++f.positive_lines;
      dcp_sum += dcp;
      index_sum += line;
      f.max_dcp = std::max(f.max_dcp, dcp);
      if (!in_run) {
        ++f.bay_runs;
        in_run = true;
      }
    } else {
      ++f.zero_lines;
      in_run = false;
    }
  }
  if (f.positive_lines > 0) {
    f.mean_dcp = static_cast<double>(dcp_sum) / f.positive_lines;
    f.mean_line_index = static_cast<double>(index_sum) / f.positive_lines;
  }
  return f;
}

int perimeter_contact_count(const DeficiencyMap& map) {
  int count = 0;
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      if (map.on_boundary(x, y) && map.label_at(x, y) == CellLabel::Object) {
        ++count;
      }
    }
  }
  return count;
}

std::string render_deficiency_map(const DeficiencyMap& map) {
  std::string out;
  out.reserve(static_cast<std::size_t>(map.height) * (map.width + 1));
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      char c = '0';
      if (map.on_boundary(x, y)) {
        c = '1';
      } else if (map.label_at(x, y) == CellLabel::Object) {
        c = '2';
      } else if (map.label_at(x, y) == CellLabel::Deficiency) {
        c = '+';
      }
      out += c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace chbf
