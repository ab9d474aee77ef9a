#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "facereview/detectors.hpp"
#include "facereview/gaussian.hpp"
#include "facereview/kernels.hpp"
#include "facereview/synthetic.hpp"

using namespace facereview;
using namespace facereview::kernels;

namespace {

std::vector<double> uniform(std::size_t n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

// Restores the active table on scope exit.
struct IsaGuard {
  const KernelTable& saved = active_kernels();
  ~IsaGuard() { set_active_isa(saved.isa); }
};

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(isa_supported(Isa::Scalar));
  CHECK(supported_isas().front() == Isa::Scalar);
  CHECK(kernels_for(Isa::Scalar).isa == Isa::Scalar);
  CHECK(isa_name(Isa::Avx2) == "avx2");
  if (!isa_supported(Isa::Avx2)) MESSAGE("AVX2 not available: vector variants untested on this host");
}

TEST_CASE("vector kernels are bit-identical to the scalar reference") {
  const KernelTable& ref = scalar_kernels();
  for (const Isa isa : supported_isas()) {
    if (isa == Isa::Scalar) continue;
    const KernelTable& vec = kernels_for(isa);
    CAPTURE(isa_name(isa));

    // Lengths that exercise the remainder loops.
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u}) {
      CAPTURE(n);
      {  // taylor_exp
        const auto x = uniform(n, -6.0, 1.0, 1);
        for (int terms : {1, 2, 5, 9}) {
          const auto coeffs = taylor_coefficients(terms);
          for (bool clamp : {false, true}) {
            std::vector<double> r(n), v(n);
            ref.taylor_exp(x, coeffs, clamp, r);
            vec.taylor_exp(x, coeffs, clamp, v);
            CHECK(bitwise_equal(r, v));
          }
        }
      }
      {  // harris_response, min_eigenvalue
        const auto a = uniform(n, 0.0, 1e5, 2);
        const auto b = uniform(n, 0.0, 1e5, 3);
        auto c = uniform(n, -1.0, 1.0, 4);
        for (std::size_t i = 0; i < n; ++i) c[i] *= std::sqrt(a[i] * b[i]);
        std::vector<double> r(n), v(n);
        ref.harris_response(a, b, c, 0.04, r);
        vec.harris_response(a, b, c, 0.04, v);
        CHECK(bitwise_equal(r, v));
        ref.min_eigenvalue(a, b, c, r);
        vec.min_eigenvalue(a, b, c, v);
        CHECK(bitwise_equal(r, v));
      }
    }

    {  // accumulate_window
      for (int width : {9, 13, 31}) {
        const int height = 11;
        const std::size_t n = static_cast<std::size_t>(width) * height;
        const auto xx = uniform(n, 0.0, 500.0, 5);
        const auto yy = uniform(n, 0.0, 500.0, 6);
        const auto xy = uniform(n, -500.0, 500.0, 7);
        for (int radius : {1, 2, 3}) {
          const auto w = gaussian_window(radius, 1.5, GaussianMode::exact());
          std::vector<double> ra(n, -1.0), rb(n, -1.0), rc(n, -1.0);
          std::vector<double> va(n, -1.0), vb(n, -1.0), vc(n, -1.0);
          const int margin = radius + 1;
          ref.accumulate_window({xx, yy, xy, width, height, w.weights(), radius, margin, ra, rb, rc});
          vec.accumulate_window({xx, yy, xy, width, height, w.weights(), radius, margin, va, vb, vc});
          CHECK(bitwise_equal(ra, va));
          CHECK(bitwise_equal(rb, vb));
          CHECK(bitwise_equal(rc, vc));
        }
      }
    }
  }
}

TEST_CASE("detector output does not depend on the active instruction set") {
  IsaGuard guard;
  const auto img = synthetic::random_image(67, 53, 99);
  const auto board = synthetic::checkerboard(96, 16);

  for (const auto kind : {DetectorKind::Harris, DetectorKind::ShiTomasi}) {
    for (const auto mode : {GaussianMode::exact(), GaussianMode::taylor()}) {
      DetectorParams p;
      p.kind = kind;
      p.harris.window = mode;
      set_active_isa(Isa::Scalar);
      const auto ref_img = detect_corners(img, p);
      const auto ref_board = detect_corners(board, p);
      const auto ref_resp = harris_family_response(img, kind, p.harris);
      for (const Isa isa : supported_isas()) {
        set_active_isa(isa);
        CHECK(detect_corners(img, p) == ref_img);
        CHECK(detect_corners(board, p) == ref_board);
        CHECK(harris_family_response(img, kind, p.harris) == ref_resp);
      }
    }
  }
}
