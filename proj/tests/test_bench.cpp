#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "facereview/bench.hpp"
#include "facereview/error.hpp"
#include "facereview/synthetic.hpp"

using namespace facereview;
namespace fs = std::filesystem;

TEST_CASE("corner agreement") {
  const std::vector<CornerPoint> ref{{10, 10, 9.0}, {20, 20, 8.0}, {30, 30, 7.0}, {40, 40, 1.0}};

  SUBCASE("identical lists match completely") {
    const auto a = corner_agreement(ref, ref, 4, 1.0);
    CHECK(a.top_n == 4);
    CHECK(a.matched == 4);
    CHECK(a.matched_fraction == 1.0);
  }
  SUBCASE("one-pixel shifts match within radius 1, diagonal ones do not") {
    const std::vector<CornerPoint> cand{{11, 10, 1.0}, {21, 21, 1.0}, {30, 29, 1.0}};
    const auto a = corner_agreement(ref, cand, 3, 1.0);
    CHECK(a.matched == 2);
    CHECK(a.matched_fraction == doctest::Approx(2.0 / 3.0));
    CHECK(corner_agreement(ref, cand, 3, 1.5).matched == 3);
  }
  SUBCASE("candidates are consumed once") {
    const std::vector<CornerPoint> close{{0, 0, 5.0}, {1, 0, 4.0}};
    const std::vector<CornerPoint> single{{0, 0, 1.0}};
    CHECK(corner_agreement(close, single, 2, 2.0).matched == 1);
  }
  SUBCASE("top_n selects the strongest reference corners") {
    const std::vector<CornerPoint> cand{{40, 40, 1.0}};
    CHECK(corner_agreement(ref, cand, 3, 1.0).matched == 0);
    CHECK(corner_agreement(ref, cand, 10, 1.0).top_n == 4);
  }
  SUBCASE("empty reference") {
    const auto a = corner_agreement({}, ref, 5, 1.0);
    CHECK(a.empty_reference());
    CHECK(a.matched_fraction == 1.0);
  }
  CHECK_THROWS_AS(corner_agreement(ref, ref, 0, 1.0), ParameterError);
}

TEST_CASE("agreement fraction is symmetric for equal-size one-to-one matches") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(0, 200);
  std::vector<CornerPoint> a, b;
  for (int i = 0; i < 30; ++i) {
    const int x = d(rng) * 10, y = d(rng) * 10;  // spread far apart
    a.push_back({x, y, 100.0 - i});
    b.push_back({x + (i % 3 == 0 ? 5 : 0), y, 100.0 - i});
  }
  CHECK(corner_agreement(a, b, 30, 1.0).matched == corner_agreement(b, a, 30, 1.0).matched);
}

TEST_CASE("timing statistics") {
  const auto board = synthetic::checkerboard(64, 16);
  const auto t = time_detector(board, {}, 3, "harris", "board");
  CHECK(t.repetitions == 3);
  CHECK(t.mean_seconds > 0.0);
  CHECK(t.min_seconds <= t.mean_seconds);
  CHECK(t.std_seconds >= 0.0);
  CHECK(t.corners == detect_corners(board, {}));
  CHECK_THROWS_AS(time_detector(board, {}, 2), ParameterError);

  const auto w = time_window_construction(2, 2.0, GaussianMode::taylor(), 10, 3);
  CHECK(w.detector_tag == "window-taylor");
  CHECK(w.mean_seconds > 0.0);
  CHECK_THROWS_AS(time_window_construction(2, 2.0, GaussianMode::exact(), 0, 3), ParameterError);
}

TEST_CASE("bench grid") {
  BenchGrid grid;
  const auto dets = grid.detectors();
  REQUIRE(dets.size() == 5);
  CHECK(dets[0].tag == "harris-exact");
  CHECK(dets[1].tag == "harris-taylor");
  // Only the exponential differs between the two Harris entries.
  CHECK(dets[0].params.harris.effective_radius() == dets[1].params.harris.effective_radius());
  CHECK(dets[0].params.harris.sigma == dets[1].params.harris.sigma);
  CHECK(dets[0].params.harris.window.kind == WindowKind::Exact);
  CHECK(dets[1].params.harris.window.kind == WindowKind::Taylor);
}

TEST_CASE("bench report files") {
  std::random_device rd;
  const fs::path out = fs::temp_directory_path() / ("facereview_bench_" + std::to_string(rd()));
  BenchGrid grid;
  grid.repetitions = 3;
  const std::vector<BenchImage> images{{"board", synthetic::checkerboard(128, 32)}, {"flat", GrayImage(32, 32, 9.0)}};
  const auto tables = bench_report(images, grid, out);
  CHECK(tables.timing.size() == 10);
  REQUIRE(tables.agreement.size() == 2);
  CHECK(tables.agreement[0].result.matched_fraction == 1.0);
  CHECK(tables.agreement[1].result.empty_reference());
  CHECK(tables.timing[0].speedup_vs_exact == 1.0);

  std::ifstream timing(out / "timing.csv");
  std::string header;
  std::getline(timing, header);
  CHECK(header == "image,detector,size,mean_s,std_s,min_s,speedup_vs_exact");
  std::stringstream agreement;
  agreement << std::ifstream(out / "agreement.csv").rdbuf();
  // 9 junctions plus 7 weaker hits where board edges meet the border.
  CHECK(agreement.str() == "image,top_n,radius,matched_fraction\nboard,16,1,1.000000\nflat,0,1,empty-reference\n");
  fs::remove_all(out);

  CHECK_THROWS_AS(run_bench({}, grid), ParameterError);
}
