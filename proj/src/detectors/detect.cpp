#include <algorithm>
#include <cstdio>
#include <string>

#include "facereview/detectors.hpp"
#include "facereview/error.hpp"

namespace facereview {

int HarrisParams::effective_radius() const {
  if (radius) {
    if (*radius < 0) throw ParameterError("window radius must be >= 0");
    return *radius;
  }
  return window.kind == WindowKind::Exact ? default_exact_radius(sigma) : default_taylor_radius(sigma);
}

std::string_view detector_name(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::Harris:
      return "harris";
    case DetectorKind::ShiTomasi:
      return "shi-tomasi";
    case DetectorKind::Susan:
      return "susan";
    case DetectorKind::Fast:
      return "fast";
  }
  return "unknown";
}

DetectorKind parse_detector_kind(std::string_view name) {
  for (auto kind : {DetectorKind::Harris, DetectorKind::ShiTomasi, DetectorKind::Susan, DetectorKind::Fast}) {
    if (detector_name(kind) == name) return kind;
  }
  throw ParameterError("unknown detector '" + std::string(name) + "'");
}

Plane harris_family_response(const GrayImage& img, DetectorKind kind, const HarrisParams& params) {
  const int radius = params.effective_radius();
  const GradientField g = gradients(img);
  const StructureTensorField t =
      params.evaluation == WindowEvaluation::Cached
          ? structure_tensor(g, gaussian_window(radius, params.sigma, params.window))
          : structure_tensor_per_pixel(g, radius, params.sigma, params.window);
  switch (kind) {
    case DetectorKind::Harris:
      return harris_response(t, params.k);
    case DetectorKind::ShiTomasi:
      return shi_tomasi_response(t);
    default:
      throw ParameterError("not a Harris-family detector");
  }
}

namespace {

std::vector<CornerPoint> harris_family(const GrayImage& img, DetectorKind kind, const HarrisParams& params) {
  if (!(params.k > 0.0 && params.k < 0.25)) throw ParameterError("harris k must be in (0, 0.25)");
  const Plane response = harris_family_response(img, kind, params);
  double threshold = 0.0;
  if (params.response_threshold) {
    threshold = *params.response_threshold;
  } else {
    const auto data = response.data();
    const double peak = *std::max_element(data.begin(), data.end());
    if (!(peak > 0.0)) return {};
    threshold = params.relative_threshold * peak;
  }
  return non_max_suppression(response, params.nms_radius, threshold, params.max_corners);
}

}  // namespace

std::vector<CornerPoint> detect_corners(const GrayImage& img, const DetectorParams& params) {
  switch (params.kind) {
    case DetectorKind::Harris:
    case DetectorKind::ShiTomasi:
      return harris_family(img, params.kind, params.harris);
    case DetectorKind::Susan:
      return susan_detect(img, params.susan);
    case DetectorKind::Fast:
      return fast_detect(img, params.fast);
  }
  return {};
}

std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void write_corners_csv(std::ostream& out, const std::vector<CornerPoint>& corners) {
  out << "x,y,score\n";
  for (const auto& c : corners) out << c.x << ',' << c.y << ',' << format_score(c.score) << '\n';
}

}  // namespace facereview
