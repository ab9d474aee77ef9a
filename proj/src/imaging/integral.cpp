#include "facereview/integral.hpp"

#include "facereview/error.hpp"

namespace facereview {

IntegralImage integral_image(const GrayImage& img) {
  const int w = img.width();
  const int h = img.height();
  std::vector<double> sums(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y) {
    double row = 0.0;
    const std::size_t base = static_cast<std::size_t>(y) * static_cast<std::size_t>(w);
    for (int x = 0; x < w; ++x) {
      row += img.at(x, y);
      sums[base + x] = (y > 0 ? sums[base - w + x] : 0.0) + row;
    }
  }
  return IntegralImage(w, h, std::move(sums));
}

double rect_sum(const IntegralImage& ii, const BoundingBox& box) {
  if (!box.fits_in(ii.width(), ii.height())) {
    throw BoundsError("rectangle (" + std::to_string(box.x) + "," + std::to_string(box.y) + "," +
                      std::to_string(box.w) + "," + std::to_string(box.h) + ") outside " +
                      std::to_string(ii.width()) + "x" + std::to_string(ii.height()) + " image");
  }
  const int x0 = box.x - 1;
  const int y0 = box.y - 1;
  const int x1 = box.right() - 1;
  const int y1 = box.bottom() - 1;
  const double br = ii.sum(x1, y1);
  const double tr = y0 >= 0 ? ii.sum(x1, y0) : 0.0;
  const double bl = x0 >= 0 ? ii.sum(x0, y1) : 0.0;
  const double tl = (x0 >= 0 && y0 >= 0) ? ii.sum(x0, y0) : 0.0;
  return br - tr - bl + tl;
}

}  // namespace facereview
