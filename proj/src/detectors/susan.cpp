#include <cmath>

#include "facereview/detectors.hpp"
#include "facereview/error.hpp"

namespace facereview {

std::vector<std::pair<int, int>> susan_mask(int radius) {
  if (radius < 1) throw ParameterError("susan mask radius must be >= 1");
  std::vector<std::pair<int, int>> mask;
  for (int dv = -radius; dv <= radius; ++dv) {
    for (int du = -radius; du <= radius; ++du) {
      if (du * du + dv * dv <= radius * radius) mask.emplace_back(du, dv);
    }
  }
  return mask;
}

Plane susan_usan(const GrayImage& img, int mask_radius, double brightness_threshold) {
  const auto mask = susan_mask(mask_radius);
  const int w = img.width();
  const int h = img.height();
  Plane usan(w, h);
  for (int y = mask_radius; y < h - mask_radius; ++y) {
    for (int x = mask_radius; x < w - mask_radius; ++x) {
      const double nucleus = img.at(x, y);
      int count = 0;
      for (const auto& [du, dv] : mask) {
        if (std::abs(img.at(x + du, y + dv) - nucleus) <= brightness_threshold) ++count;
      }
      usan.at(x, y) = count;
    }
  }
  return usan;
}

std::vector<CornerPoint> susan_detect(const GrayImage& img, const SusanParams& params) {
  if (!(params.geometric_fraction > 0.0 && params.geometric_fraction < 1.0)) {
    throw ParameterError("susan geometric fraction must be in (0, 1)");
  }
  const auto mask_area = static_cast<double>(susan_mask(params.mask_radius).size());
  const double g = params.geometric_fraction * mask_area;
  const Plane usan = susan_usan(img, params.mask_radius, params.brightness_threshold);

  Plane score(img.width(), img.height());
  const int r = params.mask_radius;
  for (int y = r; y < img.height() - r; ++y) {
    for (int x = r; x < img.width() - r; ++x) {
      const double n = usan.at(x, y);
      if (n < g) score.at(x, y) = g - n;
    }
  }
  // Scores are strictly positive where the USAN is small enough.
  return non_max_suppression(score, params.nms_radius, std::nextafter(0.0, 1.0));
}

}  // namespace facereview
