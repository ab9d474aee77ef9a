#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "facereview/detectors.hpp"
#include "facereview/image.hpp"

namespace facereview {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Eyes are the upper third of the face, mouth the lower third; the middle
/// third is not analysed.
struct FaceRois {
  BoundingBox face;
  BoundingBox eyes;
  BoundingBox mouth;
};

enum class RoiRole { Eyes, Mouth };

struct FeaturePointSet {
  std::vector<Point2> points;  // relative to the ROI
  RoiRole role = RoiRole::Eyes;
};

/// Vertical extent over horizontal extent of an ROI's feature points. An
/// openness proxy: raised brows or an open mouth increase it.
struct CuriousRatio {
  double value = 0.0;
};

/// y = a x^2 + b x + c
struct QuadraticFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double residual = 0.0;  // RMS
  bool well_posed = false;
};

enum class ExpressionLabel { Curious, Excited, Satisfied, Disinterested, Neutral };

/// Fixed reporting order.
inline constexpr ExpressionLabel kAllLabels[] = {ExpressionLabel::Curious, ExpressionLabel::Excited,
                                                 ExpressionLabel::Satisfied, ExpressionLabel::Disinterested,
                                                 ExpressionLabel::Neutral};

std::string_view label_name(ExpressionLabel label);       // "Curious", ...
std::string_view label_key(ExpressionLabel label);        // "curious", ...

/// Weights and thresholds of the expression classifier. The defaults are
/// calibration points, not measured values; override them via a config file.
struct RatingConfig {
  double w_eye = 0.3;
  double w_mouth = 0.3;
  double w_smile = 0.4;
  double curious_threshold = 0.5;
  double excited_threshold = 0.75;
  double disinterest_threshold = 0.25;
  double curious_ratio_scale = 0.6;
  double smile_residual_max = 2.0;  // px
  double a_scale = 0.05;            // 1/px

  /// Throws ParameterError unless weights are non-negative and sum to 1
  /// (+-1e-9), thresholds are ordered, and the scales are positive.
  void validate() const;
};

struct ExpressionScores {
  CuriousRatio eye_cr;
  CuriousRatio mouth_cr;
  double smile = 0.0;    // [-1, 1]
  double overall = 0.0;  // [0, 1]
  ExpressionLabel label = ExpressionLabel::Neutral;
  bool eyes_degenerate = false;   // < 2 usable points: component scored 0
  bool mouth_degenerate = false;

  friend bool operator==(const ExpressionScores& l, const ExpressionScores& r) {
    return l.eye_cr.value == r.eye_cr.value && l.mouth_cr.value == r.mouth_cr.value && l.smile == r.smile &&
           l.overall == r.overall && l.label == r.label && l.eyes_degenerate == r.eyes_degenerate &&
           l.mouth_degenerate == r.mouth_degenerate;
  }
};

/// Options of the frame pipeline that are not part of the rating config.
struct FrameOptions {
  int bezier_samples = 64;
  bool fit_raw_points = false;  // fit mouth points directly, skipping the Bezier step
};

/// Detector + rating settings as loaded from one config file.
struct PipelineConfig {
  DetectorParams detector{};
  RatingConfig rating{};
};

/// Throws SizeError when face.h < 3.
FaceRois split_rois(const BoundingBox& face);

/// Throws GeometryError for < 2 points or when all x are equal.
CuriousRatio curious_ratio(const FeaturePointSet& pts);

/// de Casteljau evaluation. Throws ParameterError for < 2 control points or t
/// outside [0, 1].
Point2 bezier_point(std::span<const Point2> control, double t);

/// Samples at t = i / (samples - 1). Throws ParameterError for samples < 2.
std::vector<Point2> rasterize_bezier(std::span<const Point2> control, int samples);

/// Least squares on x mapped to [-1, 1]; coefficients returned in the
/// original coordinates. Fewer than 3 distinct x gives well_posed = false
/// with zero coefficients.
QuadraticFit fit_quadratic(std::span<const Point2> pts);

/// Image y grows downward, so a smile (corners above the centre) fits with
/// a < 0 and maps to a positive score: clamp(-a / a_scale, -1, 1).
/// Ill-posed fits and fits with residual above smile_residual_max score 0.
double smile_score(const QuadraticFit& fit, const RatingConfig& cfg);

ExpressionScores classify_expression(CuriousRatio eye, CuriousRatio mouth, double smile,
                                     const RatingConfig& cfg);

/// split_rois -> corners per ROI -> curious ratios -> mouth curve -> smile
/// -> classification. A ROI with fewer than 2 usable points contributes 0 and
/// is flagged; the frame is still scored.
ExpressionScores frame_score(const GrayImage& img, const BoundingBox& face, const DetectorParams& detector,
                             const RatingConfig& cfg, const FrameOptions& options = {});

/// `key = value` lines, '#' comments. Keys: w_eye, w_mouth, w_smile,
/// curious_threshold, excited_threshold, disinterest_threshold,
/// curious_ratio_scale, smile_residual_max, a_scale, k, sigma, taylor_terms,
/// gaussian_mode, nms_radius, detector. Unknown keys are a ParseError.
/// Keys absent from the text keep the values already in `base`.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config_file(const std::filesystem::path& path, PipelineConfig base = {});

/// Default detector settings for frame scoring (Harris, Taylor window).
DetectorParams default_frame_detector();

}  // namespace facereview
