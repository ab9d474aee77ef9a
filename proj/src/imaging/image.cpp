#include "facereview/image.hpp"

#include <cmath>
#include <string>

#include "facereview/error.hpp"

namespace facereview {

Plane::Plane(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) throw SizeError("plane dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0) {
    throw SizeError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw SizeError("pixel buffer length does not match " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  for (double v : pixels_) {
    if (!std::isfinite(v) || v < 0.0 || v > 255.0) {
      throw ParameterError("pixel intensity outside [0, 255]: " + std::to_string(v));
    }
  }
}

GrayImage::GrayImage(int width, int height, double fill)
    : GrayImage(width, height,
                std::vector<double>(width > 0 && height > 0
                                        ? static_cast<std::size_t>(width) * static_cast<std::size_t>(height)
                                        : 0,
                                    fill)) {}

GrayImage GrayImage::crop(const BoundingBox& box) const {
  if (!box.fits_in(width_, height_)) throw BoundsError("crop box outside image");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(box.area()));
  for (int y = box.y; y < box.bottom(); ++y) {
    for (int x = box.x; x < box.right(); ++x) out.push_back(at(x, y));
  }
  return GrayImage(box.w, box.h, std::move(out));
}

}  // namespace facereview
