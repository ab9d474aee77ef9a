#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace facereview {

// Coordinates: x = column (rightward), y = row (downward), origin top-left.

/// Axis-aligned pixel rectangle. Extents are strictly positive.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  [[nodiscard]] long long area() const { return static_cast<long long>(w) * h; }
  [[nodiscard]] int right() const { return x + w; }    // exclusive
  [[nodiscard]] int bottom() const { return y + h; }   // exclusive
  [[nodiscard]] bool fits_in(int width, int height) const {
    return w > 0 && h > 0 && x >= 0 && y >= 0 && right() <= width && bottom() <= height;
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Unconstrained real-valued raster: gradients, tensor planes, responses.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, double fill = 0.0);

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] std::size_t size() const { return data_.size(); }

  [[nodiscard]] double at(int x, int y) const { return data_[index(x, y)]; }
  double& at(int x, int y) { return data_[index(x, y)]; }

  [[nodiscard]] std::span<const double> data() const { return data_; }
  [[nodiscard]] std::span<double> data() { return data_; }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  [[nodiscard]] std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

/// Grayscale raster with intensities in [0, 255], row-major.
///
/// Intensities are kept as doubles so the detector hot loops never convert.
/// The constructor validates the buffer; an instance is always well formed.
class GrayImage {
 public:
  GrayImage(int width, int height, std::vector<double> pixels);
  GrayImage(int width, int height, double fill = 0.0);

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }
  [[nodiscard]] double at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)];
  }
  [[nodiscard]] std::span<const double> pixels() const { return pixels_; }

  /// Copy of the pixels inside `box`.
  [[nodiscard]] GrayImage crop(const BoundingBox& box) const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_;
  int height_;
  std::vector<double> pixels_;
};

enum class PgmEncoding { Binary, Ascii };

/// Parses a P2 or P5 PGM with maxval <= 255. '#' comments are allowed in the
/// header. Intensities are taken verbatim (no rescaling by maxval).
/// Throws ParseError naming the byte offset of the first problem.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);
GrayImage load_pgm_file(const std::filesystem::path& path);

/// Serializes with maxval 255; intensities are rounded and clamped to [0, 255].
std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmEncoding encoding = PgmEncoding::Binary);
void save_pgm_file(const GrayImage& img, const std::filesystem::path& path,
                   PgmEncoding encoding = PgmEncoding::Binary);

}  // namespace facereview
