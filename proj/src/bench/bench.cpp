#include "facereview/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "facereview/error.hpp"

namespace facereview {
namespace {

using Clock = std::chrono::steady_clock;

TimingResult summarize(const std::vector<double>& seconds) {
  TimingResult r;
  r.repetitions = seconds.size();
  double sum = 0.0;
  r.min_seconds = std::numeric_limits<double>::infinity();
  for (double s : seconds) {
    sum += s;
    r.min_seconds = std::min(r.min_seconds, s);
  }
  r.mean_seconds = sum / static_cast<double>(seconds.size());
  double sq = 0.0;
  for (double s : seconds) sq += (s - r.mean_seconds) * (s - r.mean_seconds);
  r.std_seconds = std::sqrt(sq / static_cast<double>(seconds.size() - 1));
  return r;
}

void require_repetitions(std::size_t repetitions) {
  if (repetitions < 3) throw ParameterError("benchmark repetitions must be >= 3");
}

}  // namespace

TimingResult time_detector(const GrayImage& img, const DetectorParams& params, std::size_t repetitions,
                           std::string detector_tag, std::string image_tag) {
  require_repetitions(repetitions);
  auto warm = detect_corners(img, params);
  std::vector<double> seconds;
  seconds.reserve(repetitions);
  for (std::size_t i = 0; i < repetitions; ++i) {
    const auto start = Clock::now();
    const auto corners = detect_corners(img, params);
    const auto stop = Clock::now();
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
    if (corners != warm) throw Error("detector output changed between runs");
  }
  TimingResult r = summarize(seconds);
  r.detector_tag = std::move(detector_tag);
  r.image_tag = std::move(image_tag);
  r.corners = std::move(warm);
  return r;
}

TimingResult time_window_construction(int radius, double sigma, const GaussianMode& mode,
                                      std::size_t constructions, std::size_t repetitions) {
  require_repetitions(repetitions);
  if (constructions == 0) throw ParameterError("constructions must be >= 1");
  volatile double sink = 0.0;
  sink = sink + gaussian_window(radius, sigma, mode).at(radius, radius);
  std::vector<double> seconds;
  seconds.reserve(repetitions);
  for (std::size_t i = 0; i < repetitions; ++i) {
    const auto start = Clock::now();
    for (std::size_t c = 0; c < constructions; ++c) {
      sink = sink + gaussian_window(radius, sigma, mode).at(radius, radius);
    }
    const auto stop = Clock::now();
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }
  TimingResult r = summarize(seconds);
  r.detector_tag = mode.kind == WindowKind::Exact ? "window-exact" : "window-taylor";
  r.image_tag = "r" + std::to_string(radius);
  return r;
}

AgreementResult corner_agreement(const std::vector<CornerPoint>& reference,
                                 const std::vector<CornerPoint>& candidate, std::size_t top_n,
                                 double match_radius) {
  if (top_n < 1) throw ParameterError("top_n must be >= 1");
  std::vector<CornerPoint> ref = reference;
  std::stable_sort(ref.begin(), ref.end(), [](const CornerPoint& a, const CornerPoint& b) { return a.score > b.score; });

  AgreementResult out;
  out.match_radius = match_radius;
  out.top_n = std::min(top_n, ref.size());
  if (out.top_n == 0) return out;

  std::vector<bool> used(candidate.size(), false);
  const double r2 = match_radius * match_radius;
  for (std::size_t i = 0; i < out.top_n; ++i) {
    std::size_t best = candidate.size();
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < candidate.size(); ++j) {
      if (used[j]) continue;
      const double dx = candidate[j].x - ref[i].x;
      const double dy = candidate[j].y - ref[i].y;
      const double d2 = dx * dx + dy * dy;
      if (d2 <= r2 && d2 < best_d2) {
        best = j;
        best_d2 = d2;
      }
    }
    if (best < candidate.size()) {
      used[best] = true;
      ++out.matched;
    }
  }
  out.matched_fraction = static_cast<double>(out.matched) / static_cast<double>(out.top_n);
  return out;
}

std::vector<BenchDetector> BenchGrid::detectors() const {
  const int r = radius ? *radius : default_taylor_radius(sigma);
  DetectorParams exact;
  exact.kind = DetectorKind::Harris;
  exact.harris.k = k;
  exact.harris.sigma = sigma;
  exact.harris.radius = r;
  exact.harris.window = GaussianMode::exact();

  DetectorParams taylor = exact;
  taylor.harris.window = GaussianMode::taylor();

  DetectorParams shi = taylor;
  shi.kind = DetectorKind::ShiTomasi;

  DetectorParams susan;
  susan.kind = DetectorKind::Susan;
  DetectorParams fast;
  fast.kind = DetectorKind::Fast;

  return {{"harris-exact", exact}, {"harris-taylor", taylor}, {"shi-tomasi", shi}, {"susan", susan}, {"fast", fast}};
}

BenchTables run_bench(const std::vector<BenchImage>& images, const BenchGrid& grid) {
  if (images.empty()) throw ParameterError("benchmark needs at least one image");
  BenchTables tables;
  const auto detectors = grid.detectors();
  for (const auto& img : images) {
    std::vector<TimingResult> results;
    for (const auto& d : detectors) {
      results.push_back(time_detector(img.image, d.params, grid.repetitions, d.tag, img.tag));
    }
    const double exact_mean = results.front().mean_seconds;
    for (const auto& r : results) {
      tables.timing.push_back({img.tag, r.detector_tag, img.image.width(), img.image.height(), r.mean_seconds,
                               r.std_seconds, r.min_seconds,
                               r.mean_seconds > 0.0 ? exact_mean / r.mean_seconds : 0.0});
    }
    tables.agreement.push_back(
        {img.tag, corner_agreement(results[0].corners, results[1].corners, grid.top_n, grid.match_radius)});
  }
  return tables;
}

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

std::string timing_csv(const BenchTables& tables) {
  std::string out = "image,detector,size,mean_s,std_s,min_s,speedup_vs_exact\n";
  for (const auto& r : tables.timing) {
    out += r.image + "," + r.detector + "," + std::to_string(r.width) + "x" + std::to_string(r.height) + "," +
           fmt("%.9f", r.mean_s) + "," + fmt("%.9f", r.std_s) + "," + fmt("%.9f", r.min_s) + "," +
           fmt("%.4f", r.speedup_vs_exact) + "\n";
  }
  return out;
}

std::string agreement_csv(const BenchTables& tables) {
  std::string out = "image,top_n,radius,matched_fraction\n";
  for (const auto& r : tables.agreement) {
    out += r.image + "," + std::to_string(r.result.top_n) + "," + fmt("%g", r.result.match_radius) + "," +
           (r.result.empty_reference() ? std::string("empty-reference") : fmt("%.6f", r.result.matched_fraction)) +
           "\n";
  }
  return out;
}

BenchTables bench_report(const std::vector<BenchImage>& images, const BenchGrid& grid,
                         const std::filesystem::path& out_dir) {
  BenchTables tables = run_bench(images, grid);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());
  write_text(out_dir / "timing.csv", timing_csv(tables));
  write_text(out_dir / "agreement.csv", agreement_csv(tables));
  return tables;
}

}  // namespace facereview
