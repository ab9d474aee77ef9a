// Compiled with -mavx2 only; selected at runtime after a CPU check.

#include <immintrin.h>

#include <algorithm>

#include "facereview/kernels.hpp"

namespace facereview::kernels {
namespace {

constexpr std::size_t kLanes = 4;

void taylor_exp(std::span<const double> x, std::span<const double> coeffs, bool clamp, std::span<double> out) {
  const std::size_t terms = coeffs.size();
  const std::size_t n = x.size();
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d r = _mm256_set1_pd(coeffs[terms - 1]);
    for (std::size_t k = terms - 1; k-- > 0;) {
      r = _mm256_add_pd(_mm256_mul_pd(r, xv), _mm256_set1_pd(coeffs[k]));
    }
    // max(0, r) keeps r on ties, matching std::max(r, 0.0).
    if (clamp) r = _mm256_max_pd(zero, r);
    _mm256_storeu_pd(out.data() + i, r);
  }
  for (; i < n; ++i) {
    double r = coeffs[terms - 1];
    for (std::size_t k = terms - 1; k-- > 0;) r = r * x[i] + coeffs[k];
    out[i] = clamp ? std::max(r, 0.0) : r;
  }
}

void accumulate_window(const AccumulateArgs& p) {
  const int side = 2 * p.radius + 1;
  const std::size_t w = static_cast<std::size_t>(p.width);
  const int x_end = p.width - p.margin;
  for (int y = p.margin; y < p.height - p.margin; ++y) {
    int x = p.margin;
    for (; x + static_cast<int>(kLanes) <= x_end; x += static_cast<int>(kLanes)) {
      __m256d a = _mm256_setzero_pd();
      __m256d b = _mm256_setzero_pd();
      __m256d c = _mm256_setzero_pd();
      for (int dv = -p.radius; dv <= p.radius; ++dv) {
        const std::size_t row = static_cast<std::size_t>(y + dv) * w;
        const double* wrow = p.weights.data() + static_cast<std::size_t>((dv + p.radius) * side);
        for (int du = -p.radius; du <= p.radius; ++du) {
          const __m256d wt = _mm256_set1_pd(wrow[du + p.radius]);
          const std::size_t idx = row + static_cast<std::size_t>(x + du);
          a = _mm256_add_pd(a, _mm256_mul_pd(wt, _mm256_loadu_pd(p.xx.data() + idx)));
          b = _mm256_add_pd(b, _mm256_mul_pd(wt, _mm256_loadu_pd(p.yy.data() + idx)));
          c = _mm256_add_pd(c, _mm256_mul_pd(wt, _mm256_loadu_pd(p.xy.data() + idx)));
        }
      }
      const std::size_t o = static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x);
      _mm256_storeu_pd(p.a.data() + o, a);
      _mm256_storeu_pd(p.b.data() + o, b);
      _mm256_storeu_pd(p.c.data() + o, c);
    }
    for (; x < x_end; ++x) {
      double a = 0.0, b = 0.0, c = 0.0;
      for (int dv = -p.radius; dv <= p.radius; ++dv) {
        const std::size_t row = static_cast<std::size_t>(y + dv) * w;
        const double* wrow = p.weights.data() + static_cast<std::size_t>((dv + p.radius) * side);
        for (int du = -p.radius; du <= p.radius; ++du) {
          const double wt = wrow[du + p.radius];
          const std::size_t idx = row + static_cast<std::size_t>(x + du);
          a += wt * p.xx[idx];
          b += wt * p.yy[idx];
          c += wt * p.xy[idx];
        }
      }
      const std::size_t o = static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x);
      p.a[o] = a;
      p.b[o] = b;
      p.c[o] = c;
    }
  }
}

void harris_response(std::span<const double> a, std::span<const double> b, std::span<const double> c, double k,
                     std::span<double> out) {
  const std::size_t n = a.size();
  const __m256d kv = _mm256_set1_pd(k);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d av = _mm256_loadu_pd(a.data() + i);
    const __m256d bv = _mm256_loadu_pd(b.data() + i);
    const __m256d cv = _mm256_loadu_pd(c.data() + i);
    const __m256d tr = _mm256_add_pd(av, bv);
    const __m256d det = _mm256_sub_pd(_mm256_mul_pd(av, bv), _mm256_mul_pd(cv, cv));
    _mm256_storeu_pd(out.data() + i, _mm256_sub_pd(det, _mm256_mul_pd(kv, _mm256_mul_pd(tr, tr))));
  }
  for (; i < n; ++i) {
    const double tr = a[i] + b[i];
    out[i] = (a[i] * b[i] - c[i] * c[i]) - k * (tr * tr);
  }
}

void min_eigenvalue(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                    std::span<double> out) {
  const std::size_t n = a.size();
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d av = _mm256_loadu_pd(a.data() + i);
    const __m256d bv = _mm256_loadu_pd(b.data() + i);
    const __m256d cv = _mm256_loadu_pd(c.data() + i);
    const __m256d cc = _mm256_mul_pd(cv, cv);
    const __m256d det = _mm256_sub_pd(_mm256_mul_pd(av, bv), cc);
    const __m256d hd = _mm256_mul_pd(_mm256_sub_pd(av, bv), half);
    const __m256d root = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(hd, hd), cc));
    const __m256d larger = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(av, bv), half), root);
    const __m256d nonzero = _mm256_cmp_pd(larger, zero, _CMP_NEQ_UQ);
    const __m256d q = _mm256_div_pd(det, larger);
    _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(zero, q, nonzero));
  }
  for (; i < n; ++i) out[i] = min_eigenvalue_scalar(a[i], b[i], c[i]);
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{Isa::Avx2, &taylor_exp, &accumulate_window, &harris_response, &min_eigenvalue};
  return table;
}

}  // namespace facereview::kernels
