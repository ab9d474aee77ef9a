#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "facereview/error.hpp"
#include "facereview/review.hpp"
#include "facereview/synthetic.hpp"

using namespace facereview;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path = fs::temp_directory_path() / ("facereview_" + tag + "_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// f000 smile, f001 blank, f002 flat mouth, f003 no annotation.
FaceAnnotations fixture_frames(const fs::path& dir) {
  const auto smile = synthetic::smile_face();
  const auto blank = synthetic::blank_face();
  const auto flat = synthetic::flat_mouth_face();
  save_pgm_file(smile.image, dir / "f000.pgm");
  save_pgm_file(blank.image, dir / "f001.pgm");
  save_pgm_file(flat.image, dir / "f002.pgm");
  save_pgm_file(blank.image, dir / "f003.pgm");
  return {{"f000", smile.face}, {"f001", blank.face}, {"f002", flat.face}};
}

}  // namespace

TEST_CASE("frame sampling keeps every n-th frame from the first") {
  const std::vector<fs::path> frames{"a", "b", "c", "d", "e"};
  CHECK(sample_frames(frames, 1) == frames);
  CHECK(sample_frames(frames, 2) == std::vector<fs::path>{"a", "c", "e"});
  CHECK(sample_frames(frames, 10) == std::vector<fs::path>{"a"});
  CHECK(sample_frames({}, 3).empty());
  CHECK_THROWS_AS(sample_frames(frames, 0), ParameterError);
}

TEST_CASE("frame listing from a directory or a list file") {
  TempDir tmp("list");
  write(tmp.path / "b.pgm", "");
  write(tmp.path / "a.pgm", "");
  fs::create_directory(tmp.path / "sub");
  const auto dir = list_frames(tmp.path);
  REQUIRE(dir.size() == 2);
  CHECK(dir[0].filename() == "a.pgm");

  write(tmp.path / "list.txt", "b.pgm\n\n/abs/c.pgm\r\n");
  const auto listed = list_frames(tmp.path / "list.txt");
  REQUIRE(listed.size() == 2);
  CHECK(listed[0] == tmp.path / "b.pgm");
  CHECK(listed[1] == fs::path("/abs/c.pgm"));

  CHECK_THROWS_AS(list_frames(tmp.path / "missing.txt"), IoError);
}

TEST_CASE("annotation parsing") {
  const auto ann = parse_annotations("frame,x,y,w,h\nf000,1,2,30,40\r\n\nf001,0,0,5,5\n");
  REQUIRE(ann.size() == 2);
  CHECK(ann.at("f000") == BoundingBox{1, 2, 30, 40});

  CHECK_THROWS_AS(parse_annotations("f000,1,2,3,4\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_annotations("frame,x,y,w,h\nf0,1,2,3\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_annotations("frame,x,y,w,h\nf0,1,2,3,4\nf1,1,x,3,4\n"), doctest::Contains("line 3"),
                       ParseError);
  CHECK_THROWS_AS(parse_annotations("frame,x,y,w,h\nf0,1,2,0,4\n"), ParseError);
  CHECK_THROWS_AS(parse_annotations(""), ParseError);
}

TEST_CASE("aggregation") {
  ExpressionScores sat;
  sat.overall = 0.6;
  sat.label = ExpressionLabel::Satisfied;
  ExpressionScores dis;
  dis.overall = 0.2;
  dis.label = ExpressionLabel::Disinterested;
  const std::vector<FrameRecord> records{
      {"a", true, sat}, {"b", false, std::nullopt}, {"c", true, dis}, {"d", true, sat}};

  const auto rep = aggregate(records, "widget");
  CHECK(rep.product_id == "widget");
  CHECK(rep.frames_total == 4);
  CHECK(rep.frames_with_face == 3);
  CHECK(rep.mean_overall == doctest::Approx(1.4 / 3.0));
  CHECK(rep.rating == doctest::Approx(5.0 * 1.4 / 3.0));
  double sum = 0.0;
  for (auto label : kAllLabels) sum += rep.label_fractions.at(label);
  CHECK(sum == doctest::Approx(1.0));
  CHECK(rep.label_fractions.at(ExpressionLabel::Satisfied) == doctest::Approx(2.0 / 3.0));
  CHECK(rep.label_fractions.at(ExpressionLabel::Curious) == 0.0);

  // Order of records does not matter.
  const std::vector<FrameRecord> shuffled{records[3], records[2], records[1], records[0]};
  CHECK(summary_text(aggregate(shuffled, "widget")) == summary_text(rep));

  const auto none = aggregate({{"x", false, std::nullopt}});
  CHECK(none.frames_with_face == 0);
  CHECK(none.rating == 0.0);
  CHECK(none.label_fractions.empty());
}

TEST_CASE("report text formats") {
  ExpressionScores s;
  s.eye_cr = {0.125};
  s.mouth_cr = {0.5};
  s.smile = -0.25;
  s.overall = 0.4;
  s.label = ExpressionLabel::Neutral;
  const std::vector<FrameRecord> records{{"f1", true, s}, {"f2", false, std::nullopt}};
  CHECK(frames_csv(records) ==
        "frame,face_found,eye_cr,mouth_cr,smile,overall,label\n"
        "f1,1,0.125000,0.500000,-0.250000,0.400000,Neutral\n"
        "f2,0,,,,,\n");
  CHECK(summary_text(aggregate(records, "p")) ==
        "product_id: p\n"
        "frames_total: 2\n"
        "frames_with_face: 1\n"
        "rating: 2.000000\n"
        "mean_overall: 0.400000\n"
        "fraction_curious: 0.000000\n"
        "fraction_excited: 0.000000\n"
        "fraction_satisfied: 0.000000\n"
        "fraction_disinterested: 0.000000\n"
        "fraction_neutral: 1.000000\n");
}

TEST_CASE("annotated session end to end") {
  TempDir tmp("session");
  fs::create_directory(tmp.path / "frames");
  const auto ann = fixture_frames(tmp.path / "frames");
  const auto frames = list_frames(tmp.path / "frames");
  const auto records = run_session(frames, ann, default_frame_detector(), {});
  REQUIRE(records.size() == 4);
  CHECK(records[0].scores->label == ExpressionLabel::Satisfied);
  CHECK(records[1].scores->label == ExpressionLabel::Disinterested);
  CHECK_FALSE(records[3].face_found);

  const auto rep = aggregate(records, "fixture");
  CHECK(rep.frames_with_face == 3);
  write_report(rep, records, tmp.path / "out");
  const auto first = slurp(tmp.path / "out" / "frames.csv") + slurp(tmp.path / "out" / "summary.txt");

  const auto again = run_session(frames, ann, default_frame_detector(), {});
  write_report(aggregate(again, "fixture"), again, tmp.path / "out2");
  CHECK(slurp(tmp.path / "out2" / "frames.csv") + slurp(tmp.path / "out2" / "summary.txt") == first);

  SUBCASE("sampling interval") {
    const auto half = run_session(sample_frames(frames, 2), ann, default_frame_detector(), {});
    REQUIRE(half.size() == 2);
    CHECK(half[0].frame_id == "f000");
    CHECK(half[1].frame_id == "f002");
  }
  SUBCASE("missing frame") {
    CHECK_THROWS_AS(run_session({tmp.path / "nope.pgm"}, ann, default_frame_detector(), {}), IoError);
  }
  SUBCASE("annotation outside the image") {
    FaceAnnotations bad{{"f000", {100, 100, 50, 50}}};
    CHECK_THROWS_AS(run_session({frames[0]}, bad, default_frame_detector(), {}), BoundsError);
  }
}

TEST_CASE("cascade face source picks the largest detection") {
  const auto smile = synthetic::smile_face();
  CascadeFaceSource src;  // zero stages: every window accepted
  const auto box = locate_face(smile.image, src);
  REQUIRE(box);
  CHECK(*box == BoundingBox{0, 0, 92, 92});  // 24 * 1.25^6 rounds to 92

  CascadeFaceSource none;
  none.model.stages.push_back({{}, 1.0});
  CHECK_FALSE(locate_face(smile.image, none));

  TempDir tmp("cascade");
  save_pgm_file(smile.image, tmp.path / "f.pgm");
  const auto recs = run_session({tmp.path / "f.pgm"}, none, default_frame_detector(), {});
  REQUIRE(recs.size() == 1);
  CHECK_FALSE(recs[0].face_found);
}
