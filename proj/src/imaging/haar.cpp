#include "facereview/haar.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "facereview/error.hpp"

namespace facereview {

HaarFeature::HaarFeature(std::vector<HaarRect> rects) : rects_(std::move(rects)) {
  bool positive = false;
  bool negative = false;
  constexpr double eps = 1e-12;
  for (const auto& r : rects_) {
    if (r.left < 0.0 || r.top < 0.0 || r.width <= 0.0 || r.height <= 0.0 || r.left + r.width > 1.0 + eps ||
        r.top + r.height > 1.0 + eps) {
      throw ParameterError("haar rectangle outside the unit window");
    }
    positive |= r.weight > 0.0;
    negative |= r.weight < 0.0;
  }
  if (!positive || !negative) {
    throw ParameterError("haar feature needs at least one positive and one negative rectangle");
  }
}

double haar_value(const IntegralImage& ii, const HaarFeature& feature, const BoundingBox& window) {
  if (!window.fits_in(ii.width(), ii.height())) throw BoundsError("haar window outside image");
  double value = 0.0;
  for (const auto& r : feature.rects()) {
    const int x0 = static_cast<int>(std::lround(r.left * window.w));
    const int x1 = static_cast<int>(std::lround((r.left + r.width) * window.w));
    const int y0 = static_cast<int>(std::lround(r.top * window.h));
    const int y1 = static_cast<int>(std::lround((r.top + r.height) * window.h));
    const int w = std::min(x1, window.w) - x0;
    const int h = std::min(y1, window.h) - y0;
    if (w <= 0 || h <= 0) continue;
    value += r.weight * rect_sum(ii, {window.x + x0, window.y + y0, w, h});
  }
  return value;
}

bool cascade_accepts(const IntegralImage& ii, const CascadeModel& model, const BoundingBox& window) {
  for (const auto& stage : model.stages) {
    double votes = 0.0;
    for (const auto& weak : stage.classifiers) {
      const double v = haar_value(ii, weak.feature, window);
      if (weak.polarity * v < weak.polarity * weak.threshold) votes += weak.vote;
    }
    if (votes < stage.threshold) return false;
  }
  return true;
}

std::vector<int> scan_window_sizes(const CascadeModel& model, const ScanParams& scan) {
  if (!(scan.scale_step > 1.0)) throw ParameterError("scale step must exceed 1");
  if (!(scan.stride_fraction > 0.0 && scan.stride_fraction <= 1.0)) {
    throw ParameterError("stride fraction must be in (0, 1]");
  }
  if (!(scan.min_scale > 0.0) || scan.max_scale < scan.min_scale) {
    throw ParameterError("invalid scale range");
  }
  std::vector<int> sizes;
  // Tolerance keeps max_scale reachable despite repeated multiplication.
  for (double s = scan.min_scale; s <= scan.max_scale * (1.0 + 1e-12); s *= scan.scale_step) {
    const int size = static_cast<int>(std::lround(model.window_base * s));
    if (size >= 1 && std::find(sizes.begin(), sizes.end(), size) == sizes.end()) sizes.push_back(size);
  }
  return sizes;
}

std::vector<BoundingBox> cascade_detect_sizes(const IntegralImage& ii, const CascadeModel& model,
                                              std::span<const int> sizes, double stride_fraction) {
  if (!(stride_fraction > 0.0 && stride_fraction <= 1.0)) {
    throw ParameterError("stride fraction must be in (0, 1]");
  }
  const auto key = [](const BoundingBox& b) { return std::tuple(b.y, b.x, b.w, b.h); };
  const auto less = [&](const BoundingBox& a, const BoundingBox& b) { return key(a) < key(b); };
  std::set<BoundingBox, decltype(less)> found(less);
  for (int size : sizes) {
    if (size < 1 || size > ii.width() || size > ii.height()) continue;
    const int stride = std::max(1, static_cast<int>(std::lround(stride_fraction * size)));
    for (int y = 0; y + size <= ii.height(); y += stride) {
      for (int x = 0; x + size <= ii.width(); x += stride) {
        const BoundingBox window{x, y, size, size};
        if (cascade_accepts(ii, model, window)) found.insert(window);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<BoundingBox> cascade_detect(const IntegralImage& ii, const CascadeModel& model,
                                        const ScanParams& scan) {
  const auto sizes = scan_window_sizes(model, scan);
  return cascade_detect_sizes(ii, model, sizes, scan.stride_fraction);
}

namespace {

[[noreturn]] void cascade_error(int line, const std::string& what) {
  throw ParseError("cascade line " + std::to_string(line) + ": " + what);
}

template <typename T>
T read_field(std::istringstream& in, int line, const char* name) {
  T value{};
  if (!(in >> value)) cascade_error(line, std::string("expected ") + name);
  return value;
}

}  // namespace

CascadeModel parse_cascade(std::string_view text) {
  CascadeModel model;
  bool have_window = false;

  struct PendingFeature {
    double threshold;
    int polarity;
    double vote;
    int line;
    std::vector<HaarRect> rects;
  };
  std::optional<PendingFeature> pending;

  const auto flush = [&]() {
    if (!pending) return;
    try {
      model.stages.back().classifiers.push_back(
          {HaarFeature(std::move(pending->rects)), pending->threshold, pending->polarity, pending->vote});
    } catch (const ParameterError& e) {
      cascade_error(pending->line, e.what());
    }
    pending.reset();
  };

  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    std::string keyword;
    if (!(in >> keyword)) continue;

    if (keyword == "window") {
      if (have_window) cascade_error(line_no, "duplicate window line");
      model.window_base = read_field<int>(in, line_no, "window size");
      if (model.window_base < 1) cascade_error(line_no, "window size must be positive");
      have_window = true;
    } else if (keyword == "stage") {
      if (!have_window) cascade_error(line_no, "stage before window");
      flush();
      model.stages.push_back({{}, read_field<double>(in, line_no, "stage threshold")});
    } else if (keyword == "feature") {
      if (model.stages.empty()) cascade_error(line_no, "feature outside a stage");
      flush();
      PendingFeature f{};
      f.threshold = read_field<double>(in, line_no, "feature threshold");
      f.polarity = read_field<int>(in, line_no, "polarity");
      f.vote = read_field<double>(in, line_no, "vote");
      f.line = line_no;
      if (f.polarity != 1 && f.polarity != -1) cascade_error(line_no, "polarity must be 1 or -1");
      pending = std::move(f);
    } else if (keyword == "rect") {
      if (!pending) cascade_error(line_no, "rect outside a feature");
      HaarRect r;
      r.left = read_field<double>(in, line_no, "left");
      r.top = read_field<double>(in, line_no, "top");
      r.width = read_field<double>(in, line_no, "width");
      r.height = read_field<double>(in, line_no, "height");
      r.weight = read_field<double>(in, line_no, "weight");
      pending->rects.push_back(r);
    } else {
      cascade_error(line_no, "unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (in >> extra) cascade_error(line_no, "unexpected trailing token '" + extra + "'");
  }
  flush();
  if (!have_window) cascade_error(line_no, "missing window line");
  return model;
}

CascadeModel load_cascade_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cascade '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_cascade(buffer.str());
}

}  // namespace facereview
