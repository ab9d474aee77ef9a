#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "facereview/bench.hpp"
#include "facereview/cli.hpp"
#include "facereview/error.hpp"
#include "facereview/expression.hpp"
#include "facereview/review.hpp"
#include "facereview/synthetic.hpp"

namespace facereview::cli {
namespace {

namespace fs = std::filesystem;

// Flags shared by every subcommand that runs a detector. Unset flags keep
// whatever the config file (or the library default) says.
struct DetectorFlags {
  std::string config;
  std::string detector;
  std::string gaussian;
  std::optional<int> taylor_terms;
  std::optional<double> sigma;
  std::optional<int> radius;
  std::optional<double> k;
  std::optional<int> nms_radius;
  std::optional<std::size_t> max_corners;
  std::optional<double> threshold;

  void attach(CLI::App& app) {
    app.add_option("--config", config, "Config file (key = value lines)");
    app.add_option("--detector", detector, "harris | shi-tomasi | susan | fast (default harris)");
    app.add_option("--gaussian", gaussian, "Gaussian window: exact | taylor (default taylor)");
    app.add_option("--taylor-terms", taylor_terms, "Taylor terms for the window exponential (default 5)");
    app.add_option("--sigma", sigma, "Gaussian sigma (default 1.5)");
    app.add_option("--radius", radius, "Window radius (default ceil(2 sigma) exact, floor(sigma sqrt 2) taylor)");
    app.add_option("--k", k, "Harris k (default 0.04)");
    app.add_option("--nms-radius", nms_radius, "Non-max suppression radius (default 2; fast 1)");
    app.add_option("--max-corners", max_corners, "Keep at most N corners (default all)");
    app.add_option("--threshold", threshold, "Absolute response threshold (default 0.01 x max response)");
  }

  [[nodiscard]] PipelineConfig resolve() const {
    PipelineConfig cfg;
    cfg.detector = default_frame_detector();
    if (!config.empty()) cfg = load_config_file(config, cfg);
    auto& d = cfg.detector;
    if (!detector.empty()) d.kind = parse_detector_kind(detector);
    if (!gaussian.empty()) {
      if (gaussian == "exact") {
        d.harris.window.kind = WindowKind::Exact;
      } else if (gaussian == "taylor") {
        d.harris.window.kind = WindowKind::Taylor;
      } else {
        throw ParameterError("--gaussian must be 'exact' or 'taylor'");
      }
    }
    if (taylor_terms) d.harris.window.approx.term_count = *taylor_terms;
    if (sigma) d.harris.sigma = *sigma;
    if (radius) d.harris.radius = *radius;
    if (k) d.harris.k = *k;
    if (nms_radius) d.harris.nms_radius = d.susan.nms_radius = d.fast.nms_radius = *nms_radius;
    if (max_corners) d.harris.max_corners = *max_corners;
    if (threshold) d.harris.response_threshold = *threshold;
    return cfg;
  }
};

BoundingBox parse_box(const std::string& text) {
  int v[4];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 4; ++i) {
    const auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc()) throw ParameterError("--face expects x,y,w,h, got '" + text + "'");
    p = next;
    if (i < 3) {
      if (p == end || *p != ',') throw ParameterError("--face expects x,y,w,h, got '" + text + "'");
      ++p;
    }
  }
  if (p != end || v[2] <= 0 || v[3] <= 0 || v[0] < 0 || v[1] < 0) {
    throw ParameterError("--face expects x,y,w,h with w,h > 0, got '" + text + "'");
  }
  return {v[0], v[1], v[2], v[3]};
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corner detection and expression-based product review"};
  app.require_subcommand(1);

  // corners
  auto* corners = app.add_subcommand("corners", "Detect corners in a PGM image; CSV on stdout");
  std::string corners_image;
  DetectorFlags corners_flags;
  corners->add_option("image", corners_image, "PGM image")->required();
  corners_flags.attach(*corners);

  // score
  auto* score = app.add_subcommand("score", "Score the expression of one face");
  std::string score_image;
  std::string score_face;
  std::string score_csv;
  bool score_fit_raw = false;
  DetectorFlags score_flags;
  score->add_option("image", score_image, "PGM image")->required();
  score->add_option("--face", score_face, "Face box x,y,w,h")->required();
  score->add_option("--csv", score_csv, "Also write a one-row frame CSV here");
  score->add_flag("--fit-raw", score_fit_raw, "Fit the mouth points directly instead of their Bezier curve");
  score_flags.attach(*score);

  // review
  auto* review = app.add_subcommand("review", "Score a frame sequence and rate the product");
  std::string review_frames;
  std::string review_annotations;
  std::string review_cascade;
  int review_interval = 1;
  std::string review_out;
  std::string review_product = "product";
  DetectorFlags review_flags;
  review->add_option("frames", review_frames, "Directory of PGM frames or a list file")->required();
  auto* ann_opt = review->add_option("--annotations", review_annotations, "Face CSV (frame,x,y,w,h)");
  auto* cas_opt = review->add_option("--cascade", review_cascade, "Cascade model file");
  ann_opt->excludes(cas_opt);
  review->add_option("--interval", review_interval, "Keep every N-th frame (default 1)");
  review->add_option("--out", review_out, "Output directory")->required();
  review->add_option("--product-id", review_product, "Product identifier for the summary");
  review_flags.attach(*review);

  // bench
  auto* bench = app.add_subcommand("bench", "Time detectors and compare Taylor vs exact Harris");
  std::string bench_dir;
  std::vector<int> bench_sizes{128, 256, 512};
  int bench_square = 32;
  std::size_t bench_reps = 5;
  std::string bench_out;
  BenchGrid grid;
  bench->add_option("images", bench_dir, "Directory of PGM images (optional)");
  bench->add_option("--sizes", bench_sizes, "Synthetic checkerboard sizes (default 128,256,512)")->delimiter(',');
  bench->add_option("--square", bench_square, "Checkerboard square size in px (default 32)");
  bench->add_option("--reps", bench_reps, "Timed repetitions per detector (>= 3, default 5)");
  bench->add_option("--out", bench_out, "Output directory")->required();
  bench->add_option("--sigma", grid.sigma, "Gaussian sigma shared by both Harris modes (default 2)");
  bench->add_option("--radius", grid.radius, "Window radius (default floor(sigma sqrt 2))");
  bench->add_option("--top-n", grid.top_n, "Reference corners compared (default 50)");
  bench->add_option("--match-radius", grid.match_radius, "Match radius in px (default 1)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("facereview");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (corners->parsed()) {
      const auto cfg = corners_flags.resolve();
      const GrayImage img = load_pgm_file(corners_image);
      write_corners_csv(out, detect_corners(img, cfg.detector));
    } else if (score->parsed()) {
      const auto cfg = score_flags.resolve();
      const BoundingBox face = parse_box(score_face);
      const GrayImage img = load_pgm_file(score_image);
      FrameOptions options;
      options.fit_raw_points = score_fit_raw;
      const auto s = frame_score(img, face, cfg.detector, cfg.rating, options);
      out << "label=" << label_name(s.label) << " overall=" << fixed6(s.overall) << " eye_cr=" << fixed6(s.eye_cr.value)
          << " mouth_cr=" << fixed6(s.mouth_cr.value) << " smile=" << fixed6(s.smile)
          << " eyes_degenerate=" << s.eyes_degenerate << " mouth_degenerate=" << s.mouth_degenerate << '\n';
      if (!score_csv.empty()) {
        FrameRecord rec{fs::path(score_image).stem().string(), true, s};
        std::ofstream csv(score_csv, std::ios::binary);
        if (!csv) throw IoError("cannot write '" + score_csv + "'");
        csv << frames_csv({rec});
      }
    } else if (review->parsed()) {
      if (review_annotations.empty() && review_cascade.empty()) {
        throw ParameterError("review needs --annotations or --cascade");
      }
      const auto cfg = review_flags.resolve();
      const auto frames = sample_frames(list_frames(review_frames), review_interval);
      FaceSource faces;
      if (!review_annotations.empty()) {
        faces = load_annotations_file(review_annotations);
      } else {
        faces = CascadeFaceSource{load_cascade_file(review_cascade), {}};
      }
      const auto records = run_session(frames, faces, cfg.detector, cfg.rating);
      const auto report = aggregate(records, review_product);
      write_report(report, records, review_out);
      out << summary_text(report);
    } else if (bench->parsed()) {
      grid.repetitions = bench_reps;
      std::vector<BenchImage> images;
      if (!bench_dir.empty()) {
        for (const auto& p : list_frames(bench_dir)) {
          if (p.extension() == ".pgm") images.push_back({p.stem().string(), load_pgm_file(p)});
        }
      }
      for (int size : bench_sizes) {
        images.push_back({"checker" + std::to_string(size), synthetic::checkerboard(size, bench_square)});
      }
      const auto tables = bench_report(images, grid, bench_out);
      out << timing_csv(tables);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace facereview::cli
