#include "facereview/synthetic.hpp"

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "facereview/error.hpp"

namespace facereview::synthetic {
namespace {

// Coverage of pixel p by the tiles of a 1-D square grid with edges at
// multiples of `square`: either one tile fully or two tiles half each.
struct Coverage {
  int tile[2];
  double weight[2];
  int count;
};

Coverage cover(int p, int square) {
  if (p % square == 0) return {{p / square - 1, p / square}, {0.5, 0.5}, 2};
  return {{p / square, 0}, {1.0, 0.0}, 1};
}

class Canvas {
 public:
  Canvas(int w, int h, double fill) : w_(w), h_(h), px_(static_cast<std::size_t>(w) * h, fill) {}

  void fill_rect(int x, int y, int w, int h, double v) {
    for (int yy = y; yy < y + h; ++yy) {
      for (int xx = x; xx < x + w; ++xx) {
        if (xx >= 0 && yy >= 0 && xx < w_ && yy < h_) px_[static_cast<std::size_t>(yy) * w_ + xx] = v;
      }
    }
  }

  GrayImage finish() && { return GrayImage(w_, h_, std::move(px_)); }

 private:
  int w_, h_;
  std::vector<double> px_;
};

constexpr int kImage = 120;
constexpr double kBackground = 60.0;
constexpr double kSkin = 180.0;
constexpr double kFeature = 30.0;
const BoundingBox kFace{12, 12, 96, 96};

Canvas face_canvas() {
  Canvas c(kImage, kImage, kBackground);
  c.fill_rect(kFace.x, kFace.y, kFace.w, kFace.h, kSkin);
  return c;
}

void draw_eyes(Canvas& c) {
  // Eyes ROI is rows [12, 44).
  c.fill_rect(30, 24, 12, 8, kFeature);
  c.fill_rect(78, 24, 12, 8, kFeature);
}

// Mouth ROI is rows [76, 108). Dots of 4x4 along y = base + sag * (1 - u^2),
// u in [-1, 1]: sag > 0 puts the centre below the corners.
void draw_mouth(Canvas& c, double sag) {
  constexpr int kDots = 7;
  const double left = 36.0, right = 84.0, base = 82.0;
  for (int i = 0; i < kDots; ++i) {
    const double u = -1.0 + 2.0 * i / (kDots - 1);
    const double cx = left + (right - left) * (u + 1.0) / 2.0;
    const double cy = base + sag * (1.0 - u * u);
    c.fill_rect(static_cast<int>(std::lround(cx)) - 2, static_cast<int>(std::lround(cy)) - 2, 4, 4, kFeature);
  }
}

}  // namespace

GrayImage checkerboard(int size, int square) {
  if (size < 1 || square < 2) throw ParameterError("checkerboard needs size >= 1 and square >= 2");
  std::vector<double> px(static_cast<std::size_t>(size) * size);
  for (int y = 0; y < size; ++y) {
    const Coverage cy = cover(y, square);
    for (int x = 0; x < size; ++x) {
      const Coverage cx = cover(x, square);
      double v = 0.0;
      for (int j = 0; j < cy.count; ++j) {
        for (int i = 0; i < cx.count; ++i) {
          // Tile -1 exists only conceptually at the left/top border.
          if (((cx.tile[i] + cy.tile[j]) & 1) != 0) v += cx.weight[i] * cy.weight[j];
        }
      }
      px[static_cast<std::size_t>(y) * size + x] = 255.0 * v;
    }
  }
  return GrayImage(size, size, std::move(px));
}

GrayImage vertical_step(int width, int height, int edge_x, double high) {
  std::vector<double> px(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) px[static_cast<std::size_t>(y) * width + x] = x >= edge_x ? high : 0.0;
  }
  return GrayImage(width, height, std::move(px));
}

GrayImage random_image(int width, int height, std::uint32_t seed, int lo, int hi) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<double> px(static_cast<std::size_t>(width) * height);
  for (auto& v : px) v = dist(rng);
  return GrayImage(width, height, std::move(px));
}

FaceFixture smile_face() {
  Canvas c = face_canvas();
  draw_eyes(c);
  draw_mouth(c, 20.0);
  return {std::move(c).finish(), kFace};
}

FaceFixture blank_face() { return {face_canvas().finish(), kFace}; }

FaceFixture flat_mouth_face() {
  Canvas c = face_canvas();
  draw_eyes(c);
  draw_mouth(c, 0.0);
  return {std::move(c).finish(), kFace};
}

}  // namespace facereview::synthetic
