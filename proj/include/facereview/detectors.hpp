#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "facereview/gaussian.hpp"
#include "facereview/image.hpp"

namespace facereview {

/// Central-difference gradients X = I(x+1) - I(x-1), Y = I(y+1) - I(y-1).
/// The outermost 1-pixel frame is exactly 0 in both planes.
struct GradientField {
  Plane x;
  Plane y;
};

/// Window-weighted gradient products. M = [[A, C], [C, B]] per pixel.
struct StructureTensorField {
  Plane a;
  Plane b;
  Plane c;
  int margin = 0;  // pixels closer than this to any edge are 0
};

struct CornerPoint {
  int x = 0;
  int y = 0;
  double score = 0.0;

  friend bool operator==(const CornerPoint&, const CornerPoint&) = default;
};

/// How the structure tensor obtains its Gaussian weights.
enum class WindowEvaluation {
  Cached,    // build the window once per image
  PerPixel,  // re-evaluate every weight at every pixel (benchmark mode)
};

struct HarrisParams {
  double k = 0.04;
  double sigma = 1.5;
  GaussianMode window = GaussianMode::taylor();
  std::optional<int> radius;  // unset: mode default (ceil(2 sigma) or floor(sigma sqrt 2))
  /// Unset: 0.01 * max response of the image (no corners if that max <= 0).
  std::optional<double> response_threshold;
  double relative_threshold = 0.01;
  int nms_radius = 2;
  std::optional<std::size_t> max_corners;
  WindowEvaluation evaluation = WindowEvaluation::Cached;

  [[nodiscard]] int effective_radius() const;
};

struct SusanParams {
  int mask_radius = 3;
  double brightness_threshold = 27.0;
  double geometric_fraction = 0.5;
  int nms_radius = 2;
};

struct FastParams {
  double intensity_threshold = 20.0;
  int arc_length = 12;
  int nms_radius = 1;
};

enum class DetectorKind { Harris, ShiTomasi, Susan, Fast };

std::string_view detector_name(DetectorKind kind);
/// Accepts "harris", "shi-tomasi", "susan", "fast". Throws ParameterError.
DetectorKind parse_detector_kind(std::string_view name);

struct DetectorParams {
  DetectorKind kind = DetectorKind::Harris;
  HarrisParams harris{};  // also drives Shi-Tomasi (window, threshold, NMS)
  SusanParams susan{};
  FastParams fast{};
};

/// Throws SizeError for images smaller than 3x3.
GradientField gradients(const GrayImage& img);

/// Accumulates X^2, Y^2, XY under `window` at pixels whose composed kernel
/// (gradient + window) stays inside the image; margin = radius + 1.
/// Throws SizeError if the image has no such pixel.
StructureTensorField structure_tensor(const GradientField& g, const GaussianWindow& window);

/// Same result as structure_tensor with a cached window, but every weight is
/// recomputed per pixel and offset. Scalar only; exists to measure the cost
/// of the exponential.
StructureTensorField structure_tensor_per_pixel(const GradientField& g, int radius, double sigma,
                                                const GaussianMode& mode);

/// R = (A B - C^2) - k (A + B)^2. Throws ParameterError unless 0 < k < 0.25.
Plane harris_response(const StructureTensorField& t, double k);

/// Smaller eigenvalue of M per pixel.
Plane shi_tomasi_response(const StructureTensorField& t);

/// Eigenvalues of [[a, c], [c, b]], larger first. The smaller one is formed as
/// det / larger so the product identity holds to rounding.
std::pair<double, double> eigenvalues(double a, double b, double c);

/// Local maxima with score >= threshold. A pixel survives when every other
/// pixel in its (2r+1)^2 neighbourhood is strictly lower, or equal but later
/// in (y, x) order. Sorted by descending score, then (y, x); truncated.
std::vector<CornerPoint> non_max_suppression(const Plane& response, int radius, double threshold,
                                             std::optional<std::size_t> max_corners = std::nullopt);

/// Circular mask of pixels with du^2 + dv^2 <= r^2 (nucleus included).
std::vector<std::pair<int, int>> susan_mask(int radius);

/// USAN area per interior pixel (0 where the mask overhangs).
Plane susan_usan(const GrayImage& img, int mask_radius, double brightness_threshold);

std::vector<CornerPoint> susan_detect(const GrayImage& img, const SusanParams& params);

/// Offsets of the 16-pixel radius-3 Bresenham circle, clockwise from 12 o'clock.
const std::vector<std::pair<int, int>>& fast_circle();

/// Segment-test score plane: for pixels with >= arc_length contiguous circle
/// pixels all brighter than centre + t (or all darker than centre - t), the
/// score is the sum of (|circle - centre| - t) over the longest such arc.
/// 0 elsewhere, including the 3-pixel border.
Plane fast_score(const GrayImage& img, double intensity_threshold, int arc_length);

std::vector<CornerPoint> fast_detect(const GrayImage& img, const FastParams& params);

/// gradients -> structure_tensor -> response -> NMS for the Harris family;
/// the SUSAN and FAST pipelines otherwise.
std::vector<CornerPoint> detect_corners(const GrayImage& img, const DetectorParams& params);

/// Response plane the Harris-family pipelines run NMS on.
Plane harris_family_response(const GrayImage& img, DetectorKind kind, const HarrisParams& params);

/// `x,y,score` CSV, scores with 6 significant digits.
void write_corners_csv(std::ostream& out, const std::vector<CornerPoint>& corners);
std::string format_score(double value);

}  // namespace facereview
