#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "facereview/cli.hpp"
#include "facereview/detectors.hpp"
#include "facereview/expression.hpp"
#include "facereview/review.hpp"
#include "facereview/synthetic.hpp"

using namespace facereview;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Workspace {
  fs::path root;
  Workspace() {
    std::random_device rd;
    root = fs::temp_directory_path() / ("facereview_cli_" + std::to_string(rd()));
    fs::create_directories(root / "frames");
    const auto smile = synthetic::smile_face();
    const auto blank = synthetic::blank_face();
    save_pgm_file(smile.image, root / "frames" / "f000.pgm");
    save_pgm_file(blank.image, root / "frames" / "f001.pgm");
    std::ofstream(root / "faces.csv") << "frame,x,y,w,h\nf000,12,12,96,96\nf001,12,12,96,96\n";
    save_pgm_file(synthetic::checkerboard(96, 16), root / "board.pgm");
  }
  ~Workspace() { fs::remove_all(root); }
  [[nodiscard]] std::string path(const std::string& rel) const { return (root / rel).string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("corners output equals the library's csv") {
  Workspace ws;
  const auto board = load_pgm_file(ws.path("board.pgm"));

  DetectorParams p = default_frame_detector();
  std::ostringstream expected;
  write_corners_csv(expected, detect_corners(board, p));
  const auto r = cli_run({"corners", ws.path("board.pgm")});
  CHECK(r.code == 0);
  CHECK(r.out == expected.str());

  p.kind = DetectorKind::Fast;
  std::ostringstream fast;
  write_corners_csv(fast, detect_corners(board, p));
  CHECK(cli_run({"corners", ws.path("board.pgm"), "--detector", "fast"}).out == fast.str());

  p = default_frame_detector();
  p.harris.window = GaussianMode::exact();
  p.harris.sigma = 2.0;
  p.harris.max_corners = 4;
  std::ostringstream exact;
  write_corners_csv(exact, detect_corners(board, p));
  CHECK(cli_run({"corners", ws.path("board.pgm"), "--gaussian", "exact", "--sigma", "2", "--max-corners", "4"}).out ==
        exact.str());
}

TEST_CASE("flags override the config file") {
  Workspace ws;
  std::ofstream(ws.root / "cfg.txt") << "detector = susan\nsigma = 3\n";
  const auto board = load_pgm_file(ws.path("board.pgm"));
  DetectorParams p = default_frame_detector();
  p.kind = DetectorKind::Harris;
  p.harris.sigma = 3.0;
  std::ostringstream expected;
  write_corners_csv(expected, detect_corners(board, p));
  const auto r = cli_run({"corners", ws.path("board.pgm"), "--config", ws.path("cfg.txt"), "--detector", "harris"});
  CHECK(r.code == 0);
  CHECK(r.out == expected.str());
}

TEST_CASE("score prints the frame scores") {
  Workspace ws;
  const auto smile = synthetic::smile_face();
  const auto s = frame_score(smile.image, smile.face, default_frame_detector(), {});
  const auto r = cli_run({"score", ws.path("frames/f000.pgm"), "--face", "12,12,96,96", "--csv", ws.path("one.csv")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("label=Satisfied overall=", 0) == 0);
  CHECK(slurp(ws.root / "one.csv") == frames_csv({{"f000", true, s}}));

  CHECK(cli_run({"score", ws.path("frames/f000.pgm"), "--face", "12,12,96"}).code == 1);
  CHECK(cli_run({"score", ws.path("frames/f000.pgm"), "--face", "100,100,96,96"}).code == 1);
}

TEST_CASE("review writes the report and prints the summary") {
  Workspace ws;
  const auto r = cli_run({"review", ws.path("frames"), "--annotations", ws.path("faces.csv"), "--out", ws.path("out"),
                          "--product-id", "mug"});
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(ws.root / "out" / "summary.txt"));
  CHECK(r.out.rfind("product_id: mug\nframes_total: 2\nframes_with_face: 2\n", 0) == 0);

  const auto frames = list_frames(ws.root / "frames");
  const auto records = run_session(frames, load_annotations_file(ws.root / "faces.csv"), default_frame_detector(), {});
  CHECK(slurp(ws.root / "out" / "frames.csv") == frames_csv(records));

  // Byte-identical on a second run.
  cli_run({"review", ws.path("frames"), "--annotations", ws.path("faces.csv"), "--out", ws.path("out2"),
           "--product-id", "mug"});
  CHECK(slurp(ws.root / "out2" / "frames.csv") == slurp(ws.root / "out" / "frames.csv"));
  CHECK(slurp(ws.root / "out2" / "summary.txt") == slurp(ws.root / "out" / "summary.txt"));

  const auto half = cli_run({"review", ws.path("frames"), "--annotations", ws.path("faces.csv"), "--interval", "2",
                             "--out", ws.path("out3")});
  CHECK(half.out.find("frames_total: 1\n") != std::string::npos);

  std::ofstream(ws.root / "empty.cascade") << "window 24\n";
  const auto cas = cli_run({"review", ws.path("frames"), "--cascade", ws.path("empty.cascade"), "--out", ws.path("c")});
  CHECK(cas.code == 0);
  CHECK(cas.out.find("frames_with_face: 2\n") != std::string::npos);
}

TEST_CASE("review argument errors") {
  Workspace ws;
  CHECK(cli_run({"review", ws.path("frames"), "--out", ws.path("o")}).code == 1);
  CHECK(cli_run({"review", ws.path("frames"), "--annotations", ws.path("missing.csv"), "--out", ws.path("o")}).code ==
        1);
  const auto both = cli_run({"review", ws.path("frames"), "--annotations", ws.path("faces.csv"), "--cascade", "x",
                             "--out", ws.path("o")});
  CHECK(both.code != 0);
  const auto bad = cli_run({"review", ws.path("frames"), "--annotations", ws.path("faces.csv"), "--interval", "0",
                            "--out", ws.path("o")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("interval") != std::string::npos);
}

TEST_CASE("bench writes both tables") {
  Workspace ws;
  const auto r = cli_run({"bench", "--sizes", "64", "--square", "16", "--reps", "3", "--out", ws.path("bench")});
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(ws.root / "bench" / "timing.csv"));
  CHECK(r.out.find("checker64,harris-taylor,64x64,") != std::string::npos);
  CHECK(slurp(ws.root / "bench" / "agreement.csv").rfind("image,top_n,radius,matched_fraction\n", 0) == 0);
  CHECK(cli_run({"bench", "--sizes", "64", "--reps", "2", "--out", ws.path("b2")}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(cli_run({}).code != 0);
  CHECK(cli_run({"frobnicate"}).code != 0);
  CHECK(cli_run({"corners"}).code != 0);
  CHECK(cli_run({"corners", "/nonexistent.pgm"}).code == 1);
  CHECK(cli_run({"corners", "/nonexistent.pgm", "--gaussian", "fuzzy"}).code == 1);
  const auto help = cli_run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("corners") != std::string::npos);
}

TEST_CASE("edge inputs") {
  Workspace ws;
  save_pgm_file(GrayImage(32, 32, 100.0), ws.root / "flat.pgm");
  const auto flat = cli_run({"corners", ws.path("flat.pgm"), "--detector", "harris"});
  CHECK(flat.code == 0);
  CHECK(flat.out == "x,y,score\n");

  fs::create_directories(ws.root / "none");
  const auto empty = cli_run({"review", ws.path("none"), "--annotations", ws.path("faces.csv"), "--out", ws.path("e")});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("frames_total: 0\nframes_with_face: 0\nrating: 0.000000\n") != std::string::npos);
  CHECK(slurp(ws.root / "e" / "frames.csv") == "frame,face_found,eye_cr,mouth_cr,smile,overall,label\n");
}

TEST_CASE("bench agreement is byte-identical across runs") {
  Workspace ws;
  fs::create_directories(ws.root / "imgs");
  save_pgm_file(synthetic::checkerboard(80, 16), ws.root / "imgs" / "board.pgm");
  for (const char* out : {"b1", "b2"}) {
    REQUIRE(cli_run({"bench", ws.path("imgs"), "--sizes", "64", "--reps", "3", "--out", ws.path(out)}).code == 0);
  }
  const auto first = slurp(ws.root / "b1" / "agreement.csv");
  CHECK(first.find("board,") != std::string::npos);
  CHECK(first == slurp(ws.root / "b2" / "agreement.csv"));
}
