#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "facereview/detectors.hpp"
#include "facereview/gaussian.hpp"
#include "facereview/image.hpp"

namespace facereview {

struct TimingResult {
  std::string detector_tag;
  std::string image_tag;
  std::size_t repetitions = 0;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;  // sample standard deviation
  double min_seconds = 0.0;
  std::vector<CornerPoint> corners;  // output of the untimed warm-up run
};

struct AgreementResult {
  double match_radius = 0.0;
  std::size_t top_n = 0;  // after clipping to the reference length
  std::size_t matched = 0;
  double matched_fraction = 1.0;  // matched / top_n; 1 for an empty reference
  [[nodiscard]] bool empty_reference() const { return top_n == 0; }
};

/// Times detect_corners only (single thread, monotonic clock) after one
/// untimed warm-up. Throws ParameterError for repetitions < 3.
TimingResult time_detector(const GrayImage& img, const DetectorParams& params, std::size_t repetitions,
                           std::string detector_tag = {}, std::string image_tag = {});

/// Times `constructions` back-to-back gaussian_window builds per repetition.
TimingResult time_window_construction(int radius, double sigma, const GaussianMode& mode,
                                      std::size_t constructions, std::size_t repetitions);

/// Greedy one-to-one matching: each of the reference's top-N corners (by
/// descending score) consumes the nearest unconsumed candidate within
/// match_radius. top_n is clipped to the reference length.
AgreementResult corner_agreement(const std::vector<CornerPoint>& reference,
                                 const std::vector<CornerPoint>& candidate, std::size_t top_n,
                                 double match_radius);

struct BenchImage {
  std::string tag;
  GrayImage image;
};

struct BenchDetector {
  std::string tag;
  DetectorParams params;
};

struct BenchGrid {
  double sigma = 2.0;
  std::optional<int> radius;  // unset: floor(sigma * sqrt(2)), shared by both Harris modes
  double k = 0.04;
  std::size_t repetitions = 5;
  std::size_t top_n = 50;
  double match_radius = 1.0;

  /// harris-exact, harris-taylor, shi-tomasi, susan, fast. The two Harris
  /// entries share sigma and radius so only the exponential differs.
  [[nodiscard]] std::vector<BenchDetector> detectors() const;
};

struct TimingRow {
  std::string image;
  std::string detector;
  int width = 0;
  int height = 0;
  double mean_s = 0.0;
  double std_s = 0.0;
  double min_s = 0.0;
  double speedup_vs_exact = 0.0;
};

struct AgreementRow {
  std::string image;
  AgreementResult result;
};

struct BenchTables {
  std::vector<TimingRow> timing;
  std::vector<AgreementRow> agreement;
};

/// Runs the grid over every image. Agreement compares harris-taylor against
/// harris-exact as the reference.
BenchTables run_bench(const std::vector<BenchImage>& images, const BenchGrid& grid);

std::string timing_csv(const BenchTables& tables);
std::string agreement_csv(const BenchTables& tables);

/// run_bench, then writes timing.csv and agreement.csv into `out_dir`.
BenchTables bench_report(const std::vector<BenchImage>& images, const BenchGrid& grid,
                         const std::filesystem::path& out_dir);

}  // namespace facereview
