#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "facereview/error.hpp"
#include "facereview/expression.hpp"

namespace facereview {

Point2 bezier_point(std::span<const Point2> control, double t) {
  if (control.size() < 2) throw ParameterError("bezier curve needs at least 2 control points");
  if (!(t >= 0.0 && t <= 1.0)) throw ParameterError("bezier parameter outside [0, 1]");
  std::vector<Point2> work(control.begin(), control.end());
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      work[i].x = (1.0 - t) * work[i].x + t * work[i + 1].x;
      work[i].y = (1.0 - t) * work[i].y + t * work[i + 1].y;
    }
  }
  return work.front();
}

std::vector<Point2> rasterize_bezier(std::span<const Point2> control, int samples) {
  if (samples < 2) throw ParameterError("bezier rasterization needs at least 2 samples");
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    // Exact endpoints regardless of rounding in i / (samples - 1).
    const double t = i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1);
    out.push_back(bezier_point(control, t));
  }
  return out;
}

namespace {

// Gaussian elimination with partial pivoting; false when singular.
bool solve3(std::array<std::array<double, 4>, 3> m, std::array<double, 3>& x) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return false;
    std::swap(m[col], m[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  for (int r = 2; r >= 0; --r) {
    double s = m[r][3];
    for (int k = r + 1; k < 3; ++k) s -= m[r][k] * x[k];
    x[r] = s / m[r][r];
  }
  return true;
}

}  // namespace

QuadraticFit fit_quadratic(std::span<const Point2> pts) {
  std::vector<double> xs;
  xs.reserve(pts.size());
  for (const auto& p : pts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  if (std::unique(xs.begin(), xs.end()) - xs.begin() < 3) return {};

  const double lo = xs.front();
  const double hi = xs.back();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  // Normal equations in t = (x - mid) / half.
  std::array<double, 5> st{};  // sum t^k
  std::array<double, 3> sy{};  // sum y t^k
  for (const auto& p : pts) {
    const double t = (p.x - mid) / half;
    double tk = 1.0;
    for (int k = 0; k < 5; ++k) {
      st[k] += tk;
      if (k < 3) sy[k] += p.y * tk;
      tk *= t;
    }
  }
  std::array<std::array<double, 4>, 3> m{{
      {st[4], st[3], st[2], sy[2]},
      {st[3], st[2], st[1], sy[1]},
      {st[2], st[1], st[0], sy[0]},
  }};
  std::array<double, 3> coef{};
  if (!solve3(m, coef)) return {};
  const auto [alpha, beta, gamma] = coef;

  double sq = 0.0;
  for (const auto& p : pts) {
    const double t = (p.x - mid) / half;
    const double e = p.y - ((alpha * t + beta) * t + gamma);
    sq += e * e;
  }

  QuadraticFit fit;
  fit.a = alpha / (half * half);
  fit.b = beta / half - 2.0 * alpha * mid / (half * half);
  fit.c = alpha * mid * mid / (half * half) - beta * mid / half + gamma;
  fit.residual = std::sqrt(sq / static_cast<double>(pts.size()));
  fit.well_posed = true;
  return fit;
}

}  // namespace facereview
