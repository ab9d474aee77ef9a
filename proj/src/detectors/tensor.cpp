#include <cmath>
#include <string>

#include "facereview/detectors.hpp"
#include "facereview/error.hpp"
#include "facereview/kernels.hpp"

namespace facereview {
namespace {

struct Products {
  Plane xx, yy, xy;
};

Products gradient_products(const GradientField& g) {
  const int w = g.x.width();
  const int h = g.x.height();
  Products p{Plane(w, h), Plane(w, h), Plane(w, h)};
  const auto gx = g.x.data();
  const auto gy = g.y.data();
  auto xx = p.xx.data();
  auto yy = p.yy.data();
  auto xy = p.xy.data();
  for (std::size_t i = 0; i < gx.size(); ++i) {
    xx[i] = gx[i] * gx[i];
    yy[i] = gy[i] * gy[i];
    xy[i] = gx[i] * gy[i];
  }
  return p;
}

void check_fits(const GradientField& g, int radius) {
  if (g.x.width() != g.y.width() || g.x.height() != g.y.height()) {
    throw SizeError("gradient planes differ in size");
  }
  const int margin = radius + 1;
  if (g.x.width() < 2 * margin + 1 || g.x.height() < 2 * margin + 1) {
    throw SizeError("window of radius " + std::to_string(radius) + " does not fit a " +
                    std::to_string(g.x.width()) + "x" + std::to_string(g.x.height()) + " image");
  }
}

}  // namespace

StructureTensorField structure_tensor(const GradientField& g, const GaussianWindow& window) {
  check_fits(g, window.radius());
  const int w = g.x.width();
  const int h = g.x.height();
  const auto products = gradient_products(g);
  StructureTensorField t{Plane(w, h), Plane(w, h), Plane(w, h), window.radius() + 1};
  kernels::AccumulateArgs args;
  args.xx = products.xx.data();
  args.yy = products.yy.data();
  args.xy = products.xy.data();
  args.width = w;
  args.height = h;
  args.weights = window.weights();
  args.radius = window.radius();
  args.margin = t.margin;
  args.a = t.a.data();
  args.b = t.b.data();
  args.c = t.c.data();
  kernels::active_kernels().accumulate_window(args);
  return t;
}

StructureTensorField structure_tensor_per_pixel(const GradientField& g, int radius, double sigma,
                                                const GaussianMode& mode) {
  if (radius < 0) throw ParameterError("window radius must be >= 0");
  if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
  check_fits(g, radius);
  const int w = g.x.width();
  const int h = g.x.height();
  const auto products = gradient_products(g);
  StructureTensorField t{Plane(w, h), Plane(w, h), Plane(w, h), radius + 1};
  for (int y = t.margin; y < h - t.margin; ++y) {
    for (int x = t.margin; x < w - t.margin; ++x) {
      double a = 0.0, b = 0.0, c = 0.0;
      for (int dv = -radius; dv <= radius; ++dv) {
        for (int du = -radius; du <= radius; ++du) {
          const double wt = gaussian_weight(du, dv, sigma, mode);
          a += wt * products.xx.at(x + du, y + dv);
          b += wt * products.yy.at(x + du, y + dv);
          c += wt * products.xy.at(x + du, y + dv);
        }
      }
      t.a.at(x, y) = a;
      t.b.at(x, y) = b;
      t.c.at(x, y) = c;
    }
  }
  return t;
}

Plane harris_response(const StructureTensorField& t, double k) {
  if (!(k > 0.0 && k < 0.25)) throw ParameterError("harris k must be in (0, 0.25)");
  Plane r(t.a.width(), t.a.height());
  kernels::active_kernels().harris_response(t.a.data(), t.b.data(), t.c.data(), k, r.data());
  return r;
}

Plane shi_tomasi_response(const StructureTensorField& t) {
  Plane r(t.a.width(), t.a.height());
  kernels::active_kernels().min_eigenvalue(t.a.data(), t.b.data(), t.c.data(), r.data());
  return r;
}

std::pair<double, double> eigenvalues(double a, double b, double c) {
  const double det = a * b - c * c;
  const double mean = (a + b) * 0.5;
  const double half_diff = (a - b) * 0.5;
  const double root = std::sqrt(half_diff * half_diff + c * c);
  // Form the larger-magnitude root directly, the other through det.
  if (mean >= 0.0) {
    const double l1 = mean + root;
    return {l1, l1 != 0.0 ? det / l1 : 0.0};
  }
  const double l2 = mean - root;
  return {det / l2, l2};
}

}  // namespace facereview
