#include <string>

#include "facereview/detectors.hpp"
#include "facereview/error.hpp"

namespace facereview {

GradientField gradients(const GrayImage& img) {
  const int w = img.width();
  const int h = img.height();
  if (w < 3 || h < 3) {
    throw SizeError("gradients need at least a 3x3 image, got " + std::to_string(w) + "x" + std::to_string(h));
  }
  GradientField g{Plane(w, h), Plane(w, h)};
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      g.x.at(x, y) = img.at(x + 1, y) - img.at(x - 1, y);
      g.y.at(x, y) = img.at(x, y + 1) - img.at(x, y - 1);
    }
  }
  return g;
}

}  // namespace facereview
