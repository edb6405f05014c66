#pragma once

#include <cstdint>
#include <vector>

#include "exu/bigint.hpp"
#include "exu/query.hpp"

namespace exu::oracle {

// Guardrail on |domain|^k for full tuple enumeration.
inline constexpr uint64_t kNaiveBound = 100'000'000;
// Guardrail on n for the convolution oracle.
inline constexpr uint64_t kConvolutionBound = 100'000;

// Ground truth by full k-fold enumeration over the exceptional units.
Count count_naive(const CongruenceQuery& q);

// Frequency vector f[r] = #{x exceptional unit : x^e == r (mod n)},
// convolved k-fold over Z_n; entry c of the result. Agrees with
// count_naive everywhere both are defined, at much larger n.
Count count_convolution(const CongruenceQuery& q);

// The full table: counts for every c in [0, n) at once.
std::vector<Count> convolution_table(uint64_t n, uint32_t k, uint32_t e);

// Same enumeration over the units Z_n* instead of Z_n**.
Count count_units_naive(const CongruenceQuery& q);

}  // namespace exu::oracle
