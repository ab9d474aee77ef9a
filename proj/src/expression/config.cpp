#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "facereview/error.hpp"
#include "facereview/expression.hpp"

namespace facereview {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void config_error(int line, const std::string& what) {
  throw ParseError("config line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& v, int line, const std::string& key) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) config_error(line, "expected a number for '" + key + "'");
  return out;
}

int to_int(const std::string& v, int line, const std::string& key) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) config_error(line, "expected an integer for '" + key + "'");
  return out;
}

}  // namespace

DetectorParams default_frame_detector() {
  return DetectorParams{};
}

PipelineConfig parse_config(std::string_view text, PipelineConfig cfg) {
  std::istringstream lines{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) config_error(line_no, "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.empty()) config_error(line_no, "missing value for '" + key + "'");

    auto& r = cfg.rating;
    auto& d = cfg.detector;
    if (key == "w_eye") {
      r.w_eye = to_double(value, line_no, key);
    } else if (key == "w_mouth") {
      r.w_mouth = to_double(value, line_no, key);
    } else if (key == "w_smile") {
      r.w_smile = to_double(value, line_no, key);
    } else if (key == "curious_threshold") {
      r.curious_threshold = to_double(value, line_no, key);
    } else if (key == "excited_threshold") {
      r.excited_threshold = to_double(value, line_no, key);
    } else if (key == "disinterest_threshold") {
      r.disinterest_threshold = to_double(value, line_no, key);
    } else if (key == "curious_ratio_scale") {
      r.curious_ratio_scale = to_double(value, line_no, key);
    } else if (key == "smile_residual_max") {
      r.smile_residual_max = to_double(value, line_no, key);
    } else if (key == "a_scale") {
      r.a_scale = to_double(value, line_no, key);
    } else if (key == "k") {
      d.harris.k = to_double(value, line_no, key);
    } else if (key == "sigma") {
      d.harris.sigma = to_double(value, line_no, key);
    } else if (key == "taylor_terms") {
      d.harris.window.approx.term_count = to_int(value, line_no, key);
      if (d.harris.window.approx.term_count < 1) config_error(line_no, "taylor_terms must be >= 1");
    } else if (key == "gaussian_mode") {
      if (value == "exact") {
        d.harris.window.kind = WindowKind::Exact;
      } else if (value == "taylor") {
        d.harris.window.kind = WindowKind::Taylor;
      } else {
        config_error(line_no, "gaussian_mode must be 'exact' or 'taylor'");
      }
    } else if (key == "nms_radius") {
      const int n = to_int(value, line_no, key);
      if (n < 1) config_error(line_no, "nms_radius must be >= 1");
      d.harris.nms_radius = n;
      d.susan.nms_radius = n;
      d.fast.nms_radius = n;
    } else if (key == "detector") {
      try {
        d.kind = parse_detector_kind(value);
      } catch (const ParameterError& e) {
        config_error(line_no, e.what());
      }
    } else {
      config_error(line_no, "unknown key '" + key + "'");
    }
  }
  try {
    cfg.rating.validate();
  } catch (const ParameterError& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return cfg;
}

PipelineConfig load_config_file(const std::filesystem::path& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str(), std::move(base));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace facereview
