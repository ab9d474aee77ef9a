#include <algorithm>

#include "facereview/detectors.hpp"
#include "facereview/error.hpp"

namespace facereview {

std::vector<CornerPoint> non_max_suppression(const Plane& response, int radius, double threshold,
                                             std::optional<std::size_t> max_corners) {
  if (radius < 1) throw ParameterError("nms radius must be >= 1");
  const int w = response.width();
  const int h = response.height();
  std::vector<CornerPoint> out;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double s = response.at(x, y);
      if (!(s >= threshold)) continue;
      bool keep = true;
      const int y0 = std::max(0, y - radius), y1 = std::min(h - 1, y + radius);
      const int x0 = std::max(0, x - radius), x1 = std::min(w - 1, x + radius);
      for (int ny = y0; ny <= y1 && keep; ++ny) {
        for (int nx = x0; nx <= x1; ++nx) {
          if (nx == x && ny == y) continue;
          const double o = response.at(nx, ny);
          // Equal neighbours earlier in (y, x) order win the tie.
          const bool earlier = ny < y || (ny == y && nx < x);
          if (o > s || (o == s && earlier)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) out.push_back({x, y, s});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CornerPoint& a, const CornerPoint& b) { return a.score > b.score; });
  if (max_corners && out.size() > *max_corners) out.resize(*max_corners);
  return out;
}

}  // namespace facereview
