#include <atomic>
#include <cstdlib>
#include <string>

#include "facereview/error.hpp"
#include "facereview/kernels.hpp"

namespace facereview::kernels {
namespace {

const KernelTable* initial_table() {
  if (const char* env = std::getenv("FACEREVIEW_ISA")) {
    const std::string want(env);
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2" && isa_supported(Isa::Avx2)) return &kernels_for(Isa::Avx2);
  }
  const auto isas = supported_isas();
  return &kernels_for(isas.back());
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(FACEREVIEW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (isa_supported(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) throw ParameterError("instruction set '" + std::string(isa_name(isa)) + "' unavailable");
  switch (isa) {
    case Isa::Scalar:
      return scalar_kernels();
    case Isa::Avx2:
#ifdef FACEREVIEW_HAVE_AVX2
      return avx2_kernels();
#else
      break;
#endif
  }
  return scalar_kernels();
}

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_release); }

}  // namespace facereview::kernels
