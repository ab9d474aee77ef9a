#pragma once

// Data-parallel inner loops behind the detectors and the Gaussian window.
//
// Every kernel has a scalar reference implementation and, where the CPU
// supports it, an AVX2 variant chosen at runtime. Variants perform the same
// IEEE operations in the same order per element (no FMA contraction), so
// their outputs are bit-identical; the equivalence tests rely on this.

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace facereview::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Inputs to the windowed accumulation of gradient products.
struct AccumulateArgs {
  std::span<const double> xx;  // X^2 plane
  std::span<const double> yy;  // Y^2 plane
  std::span<const double> xy;  // X*Y plane
  int width = 0;
  int height = 0;
  std::span<const double> weights;  // (2r+1)^2, row-major by v
  int radius = 0;
  int margin = 0;  // output computed for margin <= x < width - margin (same for y)
  std::span<double> a;
  std::span<double> b;
  std::span<double> c;
};

struct KernelTable {
  Isa isa;
  /// out[i] = Horner(coeffs, x[i]), then max(out, 0) if clamp.
  void (*taylor_exp)(std::span<const double> x, std::span<const double> coeffs, bool clamp,
                     std::span<double> out);
  /// A/B/C at interior pixels; other output pixels are left untouched.
  void (*accumulate_window)(const AccumulateArgs& args);
  /// out = (a*b - c*c) - k*((a+b)*(a+b))
  void (*harris_response)(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                          double k, std::span<double> out);
  /// Smaller eigenvalue of [[a, c], [c, b]] for a, b >= 0.
  void (*min_eigenvalue)(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                         std::span<double> out);
};

const KernelTable& scalar_kernels();
#ifdef FACEREVIEW_HAVE_AVX2
const KernelTable& avx2_kernels();
#endif

bool isa_supported(Isa isa);
std::vector<Isa> supported_isas();

/// Table for `isa`; throws ParameterError if unsupported on this CPU/build.
const KernelTable& kernels_for(Isa isa);

/// Kernels used by the library. Defaults to the best supported ISA; the
/// FACEREVIEW_ISA environment variable ("scalar" or "avx2") overrides it.
const KernelTable& active_kernels();

/// Overrides the active table (tests and benchmarks). Not thread-safe with
/// respect to concurrent detector calls.
void set_active_isa(Isa isa);

/// Scalar helper shared by the kernel variants' tail loops.
inline double min_eigenvalue_scalar(double a, double b, double c) {
  const double det = a * b - c * c;
  const double half_diff = (a - b) * 0.5;
  const double root = std::sqrt(half_diff * half_diff + c * c);
  const double larger = (a + b) * 0.5 + root;
  return larger != 0.0 ? det / larger : 0.0;
}

}  // namespace facereview::kernels
