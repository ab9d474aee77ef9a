#include "facereview/review.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "facereview/error.hpp"
#include "facereview/integral.hpp"

namespace facereview {

namespace fs = std::filesystem;

std::vector<fs::path> sample_frames(const std::vector<fs::path>& frames, int interval) {
  if (interval < 1) throw ParameterError("sampling interval must be >= 1");
  std::vector<fs::path> out;
  for (std::size_t i = 0; i < frames.size(); i += static_cast<std::size_t>(interval)) out.push_back(frames[i]);
  return out;
}

std::vector<fs::path> list_frames(const fs::path& source) {
  std::error_code ec;
  if (fs::is_directory(source, ec)) {
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(source)) {
      if (entry.is_regular_file()) out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::ifstream in(source);
  if (!in) throw IoError("cannot open frame source '" + source.string() + "'");
  std::vector<fs::path> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    fs::path p(line);
    out.push_back(p.is_relative() ? source.parent_path() / p : p);
  }
  return out;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

FaceAnnotations parse_annotations(std::string_view csv) {
  std::istringstream lines{std::string(csv)};
  std::string line;
  int line_no = 0;
  bool header = false;
  FaceAnnotations out;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "frame,x,y,w,h") {
        throw ParseError("annotations line " + std::to_string(line_no) + ": expected header 'frame,x,y,w,h'");
      }
      header = true;
      continue;
    }
    const auto fields = split_csv(line);
    if (fields.size() != 5 || fields[0].empty()) {
      throw ParseError("annotations line " + std::to_string(line_no) + ": expected 5 fields");
    }
    int v[4];
    for (int i = 0; i < 4; ++i) {
      const auto& f = fields[static_cast<std::size_t>(i + 1)];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v[i]);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw ParseError("annotations line " + std::to_string(line_no) + ": bad integer '" + f + "'");
      }
    }
    if (v[0] < 0 || v[1] < 0 || v[2] <= 0 || v[3] <= 0) {
      throw ParseError("annotations line " + std::to_string(line_no) + ": box must have x,y >= 0 and w,h > 0");
    }
    out[fields[0]] = BoundingBox{v[0], v[1], v[2], v[3]};
  }
  if (!header) throw ParseError("annotations: missing header 'frame,x,y,w,h'");
  return out;
}

FaceAnnotations load_annotations_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotations '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_annotations(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::optional<BoundingBox> locate_face(const GrayImage& img, const CascadeFaceSource& source) {
  const auto boxes = cascade_detect(integral_image(img), source.model, source.scan);
  if (boxes.empty()) return std::nullopt;
  return *std::max_element(boxes.begin(), boxes.end(),
                           [](const BoundingBox& a, const BoundingBox& b) { return a.area() < b.area(); });
}

std::vector<FrameRecord> run_session(const std::vector<fs::path>& frames, const FaceSource& faces,
                                     const DetectorParams& detector, const RatingConfig& cfg,
                                     const FrameOptions& options) {
  cfg.validate();
  std::vector<FrameRecord> records;
  records.reserve(frames.size());
  for (const auto& path : frames) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) throw IoError("frame image missing: '" + path.string() + "'");
    const GrayImage img = load_pgm_file(path);

    FrameRecord rec;
    rec.frame_id = path.stem().string();
    std::optional<BoundingBox> box;
    if (const auto* ann = std::get_if<FaceAnnotations>(&faces)) {
      if (const auto it = ann->find(rec.frame_id); it != ann->end()) box = it->second;
    } else {
      box = locate_face(img, std::get<CascadeFaceSource>(faces));
    }
    if (box) {
      if (!box->fits_in(img.width(), img.height())) {
        throw BoundsError("face box for frame '" + rec.frame_id + "' lies outside the image");
      }
      rec.face_found = true;
      rec.scores = frame_score(img, *box, detector, cfg, options);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

ReviewReport aggregate(const std::vector<FrameRecord>& records, std::string product_id) {
  ReviewReport report;
  report.product_id = std::move(product_id);
  report.frames_total = records.size();

  std::map<ExpressionLabel, std::size_t> counts;
  // Sum in label order, then by value, so the result ignores record order.
  std::vector<double> overalls;
  for (const auto& r : records) {
    if (!r.face_found || !r.scores) continue;
    ++report.frames_with_face;
    ++counts[r.scores->label];
    overalls.push_back(r.scores->overall);
  }
  if (report.frames_with_face == 0) return report;

  std::sort(overalls.begin(), overalls.end());
  double total = 0.0;
  for (double v : overalls) total += v;
  const auto n = static_cast<double>(report.frames_with_face);
  for (auto label : kAllLabels) report.label_fractions[label] = static_cast<double>(counts[label]) / n;
  report.mean_overall = std::clamp(total / n, 0.0, 1.0);
  report.rating = 5.0 * report.mean_overall;
  return report;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string frames_csv(const std::vector<FrameRecord>& records) {
  std::string out = "frame,face_found,eye_cr,mouth_cr,smile,overall,label\n";
  for (const auto& r : records) {
    out += r.frame_id;
    if (r.face_found && r.scores) {
      const auto& s = *r.scores;
      out += ",1," + fixed6(s.eye_cr.value) + "," + fixed6(s.mouth_cr.value) + "," + fixed6(s.smile) + "," +
             fixed6(s.overall) + "," + std::string(label_name(s.label));
    } else {
      out += ",0,,,,,";
    }
    out += '\n';
  }
  return out;
}

std::string summary_text(const ReviewReport& report) {
  std::string out;
  out += "product_id: " + report.product_id + "\n";
  out += "frames_total: " + std::to_string(report.frames_total) + "\n";
  out += "frames_with_face: " + std::to_string(report.frames_with_face) + "\n";
  out += "rating: " + fixed6(report.rating) + "\n";
  out += "mean_overall: " + fixed6(report.mean_overall) + "\n";
  for (auto label : kAllLabels) {
    const auto it = report.label_fractions.find(label);
    const double f = it == report.label_fractions.end() ? 0.0 : it->second;
    out += "fraction_" + std::string(label_key(label)) + ": " + fixed6(f) + "\n";
  }
  return out;
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

void write_report(const ReviewReport& report, const std::vector<FrameRecord>& records, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());
  write_text(out_dir / "frames.csv", frames_csv(records));
  write_text(out_dir / "summary.txt", summary_text(report));
}

}  // namespace facereview
