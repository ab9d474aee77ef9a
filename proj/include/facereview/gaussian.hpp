#pragma once

#include <span>
#include <vector>

namespace facereview {

/// Truncated Taylor series for exp(x): powers 0 .. term_count - 1.
struct ApproxConfig {
  int term_count = 5;
  bool clamp_non_negative = true;
};

enum class WindowKind { Exact, Taylor };

struct GaussianMode {
  WindowKind kind = WindowKind::Exact;
  ApproxConfig approx{};

  static GaussianMode exact() { return {WindowKind::Exact, {}}; }
  static GaussianMode taylor(ApproxConfig cfg = {}) { return {WindowKind::Taylor, cfg}; }
};

/// Horner evaluation of sum_{n < term_count} x^n / n!, optionally max'd with 0.
///
/// The alternating series for exp(-t) is only accurate for t <= 1; beyond
/// that the partial sum can be far off or negative, which is what the clamp
/// guards against. No accuracy is claimed outside |x| <= 1.
double exp_taylor(double x, const ApproxConfig& cfg);

/// Coefficients 1/n! for n < term_count, shared by every Horner kernel so all
/// code paths round identically.
std::vector<double> taylor_coefficients(int term_count);

/// Unnormalized Gaussian weights w(u, v) = E(-(u^2 + v^2) / (2 sigma^2)) over
/// offsets u, v in [-radius, radius]; E is std::exp or exp_taylor.
/// w(0, 0) == 1 in both modes.
class GaussianWindow {
 public:
  [[nodiscard]] int radius() const { return radius_; }
  [[nodiscard]] int side() const { return 2 * radius_ + 1; }
  [[nodiscard]] double sigma() const { return sigma_; }
  [[nodiscard]] const GaussianMode& mode() const { return mode_; }

  [[nodiscard]] double at(int u, int v) const {
    return weights_[static_cast<std::size_t>((v + radius_) * side() + (u + radius_))];
  }
  /// Row-major by v, then u.
  [[nodiscard]] std::span<const double> weights() const { return weights_; }

 private:
  friend GaussianWindow gaussian_window(int radius, double sigma, const GaussianMode& mode);
  GaussianWindow(int radius, double sigma, GaussianMode mode, std::vector<double> weights)
      : radius_(radius), sigma_(sigma), mode_(mode), weights_(std::move(weights)) {}

  int radius_;
  double sigma_;
  GaussianMode mode_;
  std::vector<double> weights_;
};

/// Throws ParameterError for radius < 0, sigma <= 0, or term_count < 1.
GaussianWindow gaussian_window(int radius, double sigma, const GaussianMode& mode);

/// The exponent fed to E for offset (u, v); shared by the cached window and
/// the per-pixel evaluation path.
inline double gaussian_argument(int u, int v, double sigma) {
  return -static_cast<double>(u * u + v * v) / (2.0 * sigma * sigma);
}

/// Scalar weight for one offset, bit-identical to GaussianWindow::at.
double gaussian_weight(int u, int v, double sigma, const GaussianMode& mode);

/// ceil(2 sigma): default support of the exact window.
int default_exact_radius(double sigma);
/// floor(sigma * sqrt(2)): largest radius whose on-axis argument stays in
/// [-1, 0]. Diagonal cells still exceed that bound; see exp_taylor.
int default_taylor_radius(double sigma);

}  // namespace facereview
