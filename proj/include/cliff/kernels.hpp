#pragma once

#include <cstddef>

#include "cliff/multivector.hpp"

namespace cliff::kernels {

// The two geometric-product engines. Both are exact and must agree term for
// term; the serial sparse walk is the reference implementation, the dense
// OpenMP kernel is the one that pays off once the blade-pair count grows
// (dense operands in eight or more dimensions).
Multivector product_serial(const Multivector& a, const Multivector& b);
Multivector product_parallel(const Multivector& a, const Multivector& b);

// Dispatch bound used by geometric_product: below this many blade pairs the
// sparse serial walk wins.
inline constexpr std::size_t kParallelPairThreshold = 1u << 14;

}  // namespace cliff::kernels
