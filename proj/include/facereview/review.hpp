#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "facereview/expression.hpp"
#include "facereview/haar.hpp"

namespace facereview {

struct FrameRecord {
  std::string frame_id;  // filename stem
  bool face_found = false;
  std::optional<ExpressionScores> scores;  // present iff face_found
};

struct ReviewReport {
  std::string product_id;
  std::size_t frames_total = 0;
  std::size_t frames_with_face = 0;
  std::map<ExpressionLabel, double> label_fractions;  // empty when no faces
  double mean_overall = 0.0;
  double rating = 0.0;  // 5 * mean_overall
};

/// Face boxes keyed by frame stem, from a `frame,x,y,w,h` CSV.
using FaceAnnotations = std::map<std::string, BoundingBox, std::less<>>;

struct CascadeFaceSource {
  CascadeModel model;
  ScanParams scan{};
};

using FaceSource = std::variant<FaceAnnotations, CascadeFaceSource>;

/// Every `interval`-th entry starting at index 0. Throws ParameterError for
/// interval < 1.
std::vector<std::filesystem::path> sample_frames(const std::vector<std::filesystem::path>& frames, int interval);

/// Directory: its regular files in lexicographic order. Regular file: one
/// frame path per non-empty line (relative paths resolve against the list's
/// directory).
std::vector<std::filesystem::path> list_frames(const std::filesystem::path& source);

/// Throws ParseError naming the line on malformed rows.
FaceAnnotations parse_annotations(std::string_view csv);
FaceAnnotations load_annotations_file(const std::filesystem::path& path);

/// Largest-area detection (first in (y, x, w) order on ties), if any.
std::optional<BoundingBox> locate_face(const GrayImage& img, const CascadeFaceSource& source);

/// Scores each frame in order. Missing or unreadable images raise IoError /
/// ParseError naming the file.
std::vector<FrameRecord> run_session(const std::vector<std::filesystem::path>& frames, const FaceSource& faces,
                                     const DetectorParams& detector, const RatingConfig& cfg,
                                     const FrameOptions& options = {});

ReviewReport aggregate(const std::vector<FrameRecord>& records, std::string product_id = "product");

/// `frame,face_found,eye_cr,mouth_cr,smile,overall,label` rows.
std::string frames_csv(const std::vector<FrameRecord>& records);
/// `key: value` lines: product_id, frames_total, frames_with_face, rating,
/// mean_overall, then fraction_<label> in fixed label order.
std::string summary_text(const ReviewReport& report);

/// Writes `frames.csv` and `summary.txt` into `out_dir` (created if needed).
void write_report(const ReviewReport& report, const std::vector<FrameRecord>& records,
                  const std::filesystem::path& out_dir);

}  // namespace facereview
