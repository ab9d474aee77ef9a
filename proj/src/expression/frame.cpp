#include <algorithm>

#include "facereview/error.hpp"
#include "facereview/expression.hpp"

namespace facereview {
namespace {

// ROIs smaller than the detector's support simply have no feature points.
std::vector<Point2> roi_points(const GrayImage& img, const BoundingBox& roi, const DetectorParams& detector) {
  std::vector<CornerPoint> corners;
  try {
    corners = detect_corners(img.crop(roi), detector);
  } catch (const SizeError&) {
    return {};
  }
  std::vector<Point2> pts;
  pts.reserve(corners.size());
  for (const auto& c : corners) pts.push_back({static_cast<double>(c.x), static_cast<double>(c.y)});
  return pts;
}

bool ratio_defined(const std::vector<Point2>& pts) {
  if (pts.size() < 2) return false;
  const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                            [](const Point2& a, const Point2& b) { return a.x < b.x; });
  return hi->x > lo->x;
}

}  // namespace

ExpressionScores frame_score(const GrayImage& img, const BoundingBox& face, const DetectorParams& detector,
                             const RatingConfig& cfg, const FrameOptions& options) {
  cfg.validate();
  if (!face.fits_in(img.width(), img.height())) throw BoundsError("face box outside image");
  const FaceRois rois = split_rois(face);

  const auto eye_pts = roi_points(img, rois.eyes, detector);
  auto mouth_pts = roi_points(img, rois.mouth, detector);

  const bool eyes_ok = ratio_defined(eye_pts);
  const bool mouth_ok = ratio_defined(mouth_pts);

  const CuriousRatio eye_cr = eyes_ok ? curious_ratio({eye_pts, RoiRole::Eyes}) : CuriousRatio{0.0};
  CuriousRatio mouth_cr{0.0};
  double smile = 0.0;
  if (mouth_ok) {
    mouth_cr = curious_ratio({mouth_pts, RoiRole::Mouth});
    std::sort(mouth_pts.begin(), mouth_pts.end(),
              [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    const QuadraticFit fit = options.fit_raw_points
                                 ? fit_quadratic(mouth_pts)
                                 : fit_quadratic(rasterize_bezier(mouth_pts, options.bezier_samples));
    smile = smile_score(fit, cfg);
  }

  ExpressionScores scores = classify_expression(eye_cr, mouth_cr, smile, cfg);
  scores.eyes_degenerate = !eyes_ok;
  scores.mouth_degenerate = !mouth_ok;
  return scores;
}

}  // namespace facereview
