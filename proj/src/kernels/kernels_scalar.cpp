#include <algorithm>

#include "facereview/kernels.hpp"

namespace facereview::kernels {
namespace {

void taylor_exp(std::span<const double> x, std::span<const double> coeffs, bool clamp, std::span<double> out) {
  const std::size_t terms = coeffs.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = coeffs[terms - 1];
    for (std::size_t n = terms - 1; n-- > 0;) r = r * x[i] + coeffs[n];
    out[i] = clamp ? std::max(r, 0.0) : r;
  }
}

void accumulate_window(const AccumulateArgs& p) {
  const int side = 2 * p.radius + 1;
  const std::size_t w = static_cast<std::size_t>(p.width);
  for (int y = p.margin; y < p.height - p.margin; ++y) {
    for (int x = p.margin; x < p.width - p.margin; ++x) {
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
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double tr = a[i] + b[i];
    out[i] = (a[i] * b[i] - c[i] * c[i]) - k * (tr * tr);
  }
}

void min_eigenvalue(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                    std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = min_eigenvalue_scalar(a[i], b[i], c[i]);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, &taylor_exp, &accumulate_window, &harris_response, &min_eigenvalue};
  return table;
}

}  // namespace facereview::kernels
