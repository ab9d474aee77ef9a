#include "facereview/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "facereview/error.hpp"
#include "facereview/kernels.hpp"

namespace facereview {

std::vector<double> taylor_coefficients(int term_count) {
  if (term_count < 1) throw ParameterError("taylor term count must be >= 1, got " + std::to_string(term_count));
  std::vector<double> coeffs(static_cast<std::size_t>(term_count));
  double factorial = 1.0;
  for (int n = 0; n < term_count; ++n) {
    if (n > 0) factorial *= n;
    coeffs[static_cast<std::size_t>(n)] = 1.0 / factorial;
  }
  return coeffs;
}

double exp_taylor(double x, const ApproxConfig& cfg) {
  const auto coeffs = taylor_coefficients(cfg.term_count);
  double r = coeffs.back();
  for (int n = cfg.term_count - 2; n >= 0; --n) r = r * x + coeffs[static_cast<std::size_t>(n)];
  return cfg.clamp_non_negative ? std::max(r, 0.0) : r;
}

GaussianWindow gaussian_window(int radius, double sigma, const GaussianMode& mode) {
  if (radius < 0) throw ParameterError("window radius must be >= 0");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ParameterError("sigma must be positive");
  if (mode.kind == WindowKind::Taylor && mode.approx.term_count < 1) {
    throw ParameterError("taylor term count must be >= 1");
  }

  const int side = 2 * radius + 1;
  std::vector<double> args(static_cast<std::size_t>(side) * side);
  for (int v = -radius; v <= radius; ++v) {
    for (int u = -radius; u <= radius; ++u) {
      args[static_cast<std::size_t>((v + radius) * side + (u + radius))] = gaussian_argument(u, v, sigma);
    }
  }

  std::vector<double> weights(args.size());
  if (mode.kind == WindowKind::Exact) {
    std::transform(args.begin(), args.end(), weights.begin(), [](double a) { return std::exp(a); });
  } else {
    const auto coeffs = taylor_coefficients(mode.approx.term_count);
    kernels::active_kernels().taylor_exp(args, coeffs, mode.approx.clamp_non_negative, weights);
  }
  return GaussianWindow(radius, sigma, mode, std::move(weights));
}

double gaussian_weight(int u, int v, double sigma, const GaussianMode& mode) {
  const double arg = gaussian_argument(u, v, sigma);
  return mode.kind == WindowKind::Exact ? std::exp(arg) : exp_taylor(arg, mode.approx);
}

int default_exact_radius(double sigma) {
  if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
  return static_cast<int>(std::ceil(2.0 * sigma));
}

int default_taylor_radius(double sigma) {
  if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
  return static_cast<int>(std::floor(sigma * std::sqrt(2.0)));
}

}  // namespace facereview
