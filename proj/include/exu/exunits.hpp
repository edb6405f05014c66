#pragma once

#include <cstdint>
#include <vector>

#include "exu/arith.hpp"
#include "exu/bigint.hpp"

namespace exu::exunits {

// Residues u mod n with gcd(u, n) = gcd(1 - u, n) = 1, sorted ascending.
// For n = 1 the set is {0}: the zero ring's sole element is a unit and so
// is 1 - 0, which keeps counts consistent at n = 1.
struct ExUnitSet {
    uint64_t n = 1;
    std::vector<uint64_t> members;
};

inline constexpr uint64_t kEnumerationBound = 10'000'000;

bool is_exceptional_unit(uint64_t u, uint64_t n);

// Direct gcd scan over [0, n). Throws capacity_error above the bound.
ExUnitSet enumerate_exunits(uint64_t n);

// |Z_n**| = prod p^(s-1) (p - 2) over the prime powers of n; 0 for even n,
// 1 for n = 1 (empty product).
Count count_exunits(const arith::Factorization& factored_n);

}  // namespace exu::exunits
