#include <atomic>

#include "digitop/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace digitop::simd {
namespace {

[[maybe_unused]] bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const BitKernels* pick_default() {
  if (const BitKernels* avx2 = avx2_kernels()) return avx2;
  return &scalar_kernels();
}

std::atomic<const BitKernels*>& active_slot() {
  static std::atomic<const BitKernels*> slot{pick_default()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const BitKernels* avx2_kernels() {
#if defined(DIGITOP_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const BitKernels& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

Isa active_isa() { return active_kernels().isa; }

bool force_isa(Isa isa) {
  const BitKernels* table = nullptr;
  switch (isa) {
    case Isa::kScalar:
      table = &scalar_kernels();
      break;
    case Isa::kAvx2:
      table = avx2_kernels();
      break;
  }
  if (table == nullptr) return false;
  active_slot().store(table, std::memory_order_release);
  return true;
}

}  // namespace digitop::simd
