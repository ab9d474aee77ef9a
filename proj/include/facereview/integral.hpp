#pragma once

#include <span>
#include <vector>

#include "facereview/image.hpp"

namespace facereview {

/// Summed-area table: sum(x, y) is the total of all source pixels with
/// column <= x and row <= y.
class IntegralImage {
 public:
  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] double sum(int x, int y) const {
    return sums_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)];
  }
  [[nodiscard]] std::span<const double> sums() const { return sums_; }

 private:
  friend IntegralImage integral_image(const GrayImage& img);
  IntegralImage(int width, int height, std::vector<double> sums)
      : width_(width), height_(height), sums_(std::move(sums)) {}

  int width_;
  int height_;
  std::vector<double> sums_;
};

/// Single pass using the row-cumulative recurrence
///   row(x, y) = row(x - 1, y) + I(x, y),  sum(x, y) = sum(x, y - 1) + row(x, y).
IntegralImage integral_image(const GrayImage& img);

/// Sum of source pixels inside `box` via four table lookups.
/// Throws BoundsError if the box does not lie inside the image.
double rect_sum(const IntegralImage& ii, const BoundingBox& box);

}  // namespace facereview
