#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Word-array bitset kernels. Every kernel has a portable scalar reference
// and, where the build and the host CPU allow it, an AVX2 variant. The
// dispatcher picks one table at first use; tests compare every variant
// against the scalar table.
namespace digitop::simd {

using Words = std::span<const std::uint64_t>;
using MutableWords = std::span<std::uint64_t>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct BitKernels {
  Isa isa;
  std::size_t (*popcount)(Words a);
  std::size_t (*and_popcount)(Words a, Words b);
  void (*and_into)(MutableWords dst, Words a, Words b);
  void (*andnot_into)(MutableWords dst, Words a, Words b);  // a & ~b
  void (*or_into)(MutableWords dst, Words a, Words b);
  bool (*intersects)(Words a, Words b);
  bool (*is_subset)(Words a, Words b);  // a ⊆ b
};

const BitKernels& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks it.
const BitKernels* avx2_kernels();

// Table used by the library. Defaults to the widest supported variant.
const BitKernels& active_kernels();

Isa active_isa();

// Pins the active table; returns false when the requested ISA is unavailable.
bool force_isa(Isa isa);

}  // namespace digitop::simd
