#pragma once

#include <cstdint>

#include "facereview/image.hpp"

namespace facereview::synthetic {

/// Checkerboard whose square edges run through pixel centres at multiples of
/// `square`; edge pixels are area-averaged (127.5), so every junction sits on
/// a single pixel at (i * square, j * square).
GrayImage checkerboard(int size, int square);

/// 0 left of column `edge_x`, `high` from it on.
GrayImage vertical_step(int width, int height, int edge_x, double high = 255.0);

/// Uniform integer intensities in [lo, hi].
GrayImage random_image(int width, int height, std::uint32_t seed, int lo = 0, int hi = 255);

struct FaceFixture {
  GrayImage image;
  BoundingBox face;
};

/// Two dark eye blobs and a row of dark mouth dots on a parabola whose
/// corners sit above its centre.
FaceFixture smile_face();

/// Featureless face region.
FaceFixture blank_face();

/// Eye blobs and a straight horizontal row of mouth dots.
FaceFixture flat_mouth_face();

}  // namespace facereview::synthetic
