#include <bit>

#include "digitop/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace digitop::simd {
namespace {

std::size_t popcount_scalar(Words a) {
  std::size_t total = 0;
  for (std::uint64_t w : a) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t and_popcount_scalar(Words a, Words b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

void and_into_scalar(MutableWords dst, Words a, Words b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void andnot_into_scalar(MutableWords dst, Words a, Words b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & ~b[i];
}

void or_into_scalar(MutableWords dst, Words a, Words b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] | b[i];
}

bool intersects_scalar(Words a, Words b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool is_subset_scalar(Words a, Words b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace

const BitKernels& scalar_kernels() {
  static const BitKernels table{Isa::kScalar,      popcount_scalar,
                                and_popcount_scalar, and_into_scalar,
                                andnot_into_scalar,  or_into_scalar,
                                intersects_scalar,   is_subset_scalar};
  return table;
}

}  // namespace digitop::simd
