#include <immintrin.h>

#include <bit>

#include "digitop/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace digitop::simd {
namespace {

constexpr std::size_t kWordsPerVec = 4;

// Nibble-lookup popcount over 256-bit lanes (Mula's method); the per-byte
// counts are folded into four 64-bit sums with vpsadbw.
inline __m256i popcount256(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                      _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum64(__m256i v) {
  alignas(32) std::uint64_t lanes[kWordsPerVec];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

std::size_t popcount_avx2(Words a) {
  const std::size_t n = a.size();
  const std::size_t rounds = n / kWordsPerVec;
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t r = 0; r < rounds; ++r) {
    acc = _mm256_add_epi64(acc, popcount256(load(a.data() + r * kWordsPerVec)));
  }
  std::size_t total = hsum64(acc);
  for (std::size_t i = rounds * kWordsPerVec; i < n; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i]));
  }
  return total;
}

std::size_t and_popcount_avx2(Words a, Words b) {
  const std::size_t n = a.size();
  const std::size_t rounds = n / kWordsPerVec;
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t off = r * kWordsPerVec;
    acc = _mm256_add_epi64(
        acc, popcount256(_mm256_and_si256(load(a.data() + off), load(b.data() + off))));
  }
  std::size_t total = hsum64(acc);
  for (std::size_t i = rounds * kWordsPerVec; i < n; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

void and_into_avx2(MutableWords dst, Words a, Words b) {
  const std::size_t n = dst.size();
  const std::size_t rounds = n / kWordsPerVec;
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t off = r * kWordsPerVec;
    store(dst.data() + off, _mm256_and_si256(load(a.data() + off), load(b.data() + off)));
  }
  for (std::size_t i = rounds * kWordsPerVec; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_avx2(MutableWords dst, Words a, Words b) {
  const std::size_t n = dst.size();
  const std::size_t rounds = n / kWordsPerVec;
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t off = r * kWordsPerVec;
    // _mm256_andnot_si256(x, y) computes ~x & y.
    store(dst.data() + off,
          _mm256_andnot_si256(load(b.data() + off), load(a.data() + off)));
  }
  for (std::size_t i = rounds * kWordsPerVec; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void or_into_avx2(MutableWords dst, Words a, Words b) {
  const std::size_t n = dst.size();
  const std::size_t rounds = n / kWordsPerVec;
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t off = r * kWordsPerVec;
    store(dst.data() + off, _mm256_or_si256(load(a.data() + off), load(b.data() + off)));
  }
  for (std::size_t i = rounds * kWordsPerVec; i < n; ++i) dst[i] = a[i] | b[i];
}

bool intersects_avx2(Words a, Words b) {
  const std::size_t n = a.size();
  const std::size_t rounds = n / kWordsPerVec;
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t off = r * kWordsPerVec;
    const __m256i x = load(a.data() + off);
    const __m256i y = load(b.data() + off);
    if (!_mm256_testz_si256(x, y)) return true;
  }
  for (std::size_t i = rounds * kWordsPerVec; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool is_subset_avx2(Words a, Words b) {
  const std::size_t n = a.size();
  const std::size_t rounds = n / kWordsPerVec;
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t off = r * kWordsPerVec;
    // testc(y, x) is 1 iff (~y & x) == 0.
    if (!_mm256_testc_si256(load(b.data() + off), load(a.data() + off))) return false;
  }
  for (std::size_t i = rounds * kWordsPerVec; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace

namespace detail {

const BitKernels* avx2_table() {
  static const BitKernels table{Isa::kAvx2,      popcount_avx2,  and_popcount_avx2,
                                and_into_avx2,   andnot_into_avx2, or_into_avx2,
                                intersects_avx2, is_subset_avx2};
  return &table;
}

}  // namespace detail
}  // namespace digitop::simd
