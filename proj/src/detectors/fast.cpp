#include <cmath>

#include "facereview/detectors.hpp"
#include "facereview/error.hpp"

namespace facereview {

const std::vector<std::pair<int, int>>& fast_circle() {
  static const std::vector<std::pair<int, int>> circle{
      {0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0},  {3, 1},  {2, 2},  {1, 3},
      {0, 3},  {-1, 3}, {-2, 2}, {-3, 1}, {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3},
  };
  return circle;
}

namespace {

// Longest cyclic run of `flags`, returning the summed `excess` over it.
// With arc_length > 8 at most one run of each polarity can qualify.
double best_arc(const bool (&flags)[16], const double (&excess)[16], int arc_length) {
  int start = -1;
  for (int i = 0; i < 16; ++i) {
    if (!flags[i]) {
      start = i;
      break;
    }
  }
  if (start < 0) {
    double all = 0.0;
    for (double e : excess) all += e;
    return all;  // full ring
  }
  double best = 0.0;
  int best_len = 0;
  int len = 0;
  double sum = 0.0;
  for (int k = 1; k <= 16; ++k) {
    const int i = (start + k) % 16;
    if (flags[i]) {
      ++len;
      sum += excess[i];
    } else {
      if (len > best_len) {
        best_len = len;
        best = sum;
      }
      len = 0;
      sum = 0.0;
    }
  }
  return best_len >= arc_length ? best : 0.0;
}

}  // namespace

Plane fast_score(const GrayImage& img, double intensity_threshold, int arc_length) {
  if (arc_length < 9 || arc_length > 16) throw ParameterError("fast arc length must be in [9, 16]");
  const auto& circle = fast_circle();
  const int w = img.width();
  const int h = img.height();
  Plane score(w, h);
  for (int y = 3; y < h - 3; ++y) {
    for (int x = 3; x < w - 3; ++x) {
      const double centre = img.at(x, y);
      bool brighter[16];
      bool darker[16];
      double excess[16];
      int n_bright = 0;
      int n_dark = 0;
      for (int i = 0; i < 16; ++i) {
        const double p = img.at(x + circle[static_cast<std::size_t>(i)].first,
                                y + circle[static_cast<std::size_t>(i)].second);
        brighter[i] = p > centre + intensity_threshold;
        darker[i] = p < centre - intensity_threshold;
        excess[i] = std::abs(p - centre) - intensity_threshold;
        n_bright += brighter[i];
        n_dark += darker[i];
      }
      double s = 0.0;
      if (n_bright >= arc_length) s = best_arc(brighter, excess, arc_length);
      if (s == 0.0 && n_dark >= arc_length) s = best_arc(darker, excess, arc_length);
      score.at(x, y) = s;
    }
  }
  return score;
}

std::vector<CornerPoint> fast_detect(const GrayImage& img, const FastParams& params) {
  const Plane score = fast_score(img, params.intensity_threshold, params.arc_length);
  return non_max_suppression(score, params.nms_radius, std::nextafter(0.0, 1.0));
}

}  // namespace facereview
