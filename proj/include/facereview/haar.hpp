#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "facereview/image.hpp"
#include "facereview/integral.hpp"

namespace facereview {

/// One weighted rectangle of a Haar-like feature. Geometry is expressed as
/// fractions of the detection window so a feature scales with the window.
struct HaarRect {
  double left = 0.0;
  double top = 0.0;
  double width = 0.0;
  double height = 0.0;
  double weight = 0.0;
};

/// Signed sum of rectangles ("white minus black").
class HaarFeature {
 public:
  /// Throws ParameterError unless every rectangle lies in the unit window and
  /// at least one weight is positive and one negative.
  explicit HaarFeature(std::vector<HaarRect> rects);

  [[nodiscard]] std::span<const HaarRect> rects() const { return rects_; }

 private:
  std::vector<HaarRect> rects_;
};

struct WeakClassifier {
  HaarFeature feature;
  double threshold = 0.0;
  int polarity = 1;  // +1 or -1
  double vote = 1.0;
};

struct CascadeStage {
  std::vector<WeakClassifier> classifiers;
  double threshold = 0.0;
};

struct CascadeModel {
  int window_base = 24;
  std::vector<CascadeStage> stages;  // empty cascade accepts every window
};

struct ScanParams {
  double min_scale = 1.0;
  double max_scale = 4.0;
  double scale_step = 1.25;      // > 1
  double stride_fraction = 0.1;  // (0, 1]
};

/// Feature value inside `window`. Rectangle edges are rounded to the nearest
/// pixel; rectangles with zero area after rounding contribute 0.
double haar_value(const IntegralImage& ii, const HaarFeature& feature, const BoundingBox& window);

/// True when `window` passes every stage of `model`.
bool cascade_accepts(const IntegralImage& ii, const CascadeModel& model, const BoundingBox& window);

/// Window side lengths visited by a scan, in scan order, without duplicates.
std::vector<int> scan_window_sizes(const CascadeModel& model, const ScanParams& scan);

/// Sliding-window evaluation at the given window sizes (sizes that do not fit
/// the image are skipped). Output is sorted by (y, x, w) and de-duplicated, so
/// it does not depend on the order of `sizes`.
std::vector<BoundingBox> cascade_detect_sizes(const IntegralImage& ii, const CascadeModel& model,
                                              std::span<const int> sizes, double stride_fraction);

std::vector<BoundingBox> cascade_detect(const IntegralImage& ii, const CascadeModel& model,
                                        const ScanParams& scan);

/// Line-oriented cascade format:
///   window <N>
///   stage <threshold>
///   feature <threshold> <polarity> <vote>
///   rect <left> <top> <width> <height> <weight>
/// Blank lines and '#' comments are ignored. Unknown keywords are an error.
CascadeModel parse_cascade(std::string_view text);
CascadeModel load_cascade_file(const std::filesystem::path& path);

}  // namespace facereview
