#include <algorithm>
#include <string>

#include "facereview/error.hpp"
#include "facereview/expression.hpp"

namespace facereview {

std::string_view label_name(ExpressionLabel label) {
  switch (label) {
    case ExpressionLabel::Curious:
      return "Curious";
    case ExpressionLabel::Excited:
      return "Excited";
    case ExpressionLabel::Satisfied:
      return "Satisfied";
    case ExpressionLabel::Disinterested:
      return "Disinterested";
    case ExpressionLabel::Neutral:
      return "Neutral";
  }
  return "Unknown";
}

std::string_view label_key(ExpressionLabel label) {
  switch (label) {
    case ExpressionLabel::Curious:
      return "curious";
    case ExpressionLabel::Excited:
      return "excited";
    case ExpressionLabel::Satisfied:
      return "satisfied";
    case ExpressionLabel::Disinterested:
      return "disinterested";
    case ExpressionLabel::Neutral:
      return "neutral";
  }
  return "unknown";
}

FaceRois split_rois(const BoundingBox& face) {
  if (face.h < 3) throw SizeError("face box must be at least 3 px tall, got " + std::to_string(face.h));
  if (face.w < 1) throw SizeError("face box must have positive width");
  const int third = (face.h + 1) / 3;  // round(h / 3)
  const int mouth_h = face.h - 2 * third;
  return {face, {face.x, face.y, face.w, third}, {face.x, face.bottom() - mouth_h, face.w, mouth_h}};
}

CuriousRatio curious_ratio(const FeaturePointSet& pts) {
  if (pts.points.size() < 2) {
    throw GeometryError("curious ratio needs at least 2 points, got " + std::to_string(pts.points.size()));
  }
  const auto [min_x, max_x] = std::minmax_element(pts.points.begin(), pts.points.end(),
                                                  [](const Point2& a, const Point2& b) { return a.x < b.x; });
  const auto [min_y, max_y] = std::minmax_element(pts.points.begin(), pts.points.end(),
                                                  [](const Point2& a, const Point2& b) { return a.y < b.y; });
  const double dx = max_x->x - min_x->x;
  if (!(dx > 0.0)) throw GeometryError("curious ratio undefined: all points share one x");
  return {(max_y->y - min_y->y) / dx};
}

}  // namespace facereview
