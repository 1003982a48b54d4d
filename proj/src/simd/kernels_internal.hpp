#pragma once

#include "digitop/simd/kernels.hpp"

namespace digitop::simd::detail {

// Defined in kernels_avx2.cpp when the compiler supports -mavx2.
const BitKernels* avx2_table();

}  // namespace digitop::simd::detail
