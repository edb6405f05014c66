#include "exu/exunits.hpp"

#include <numeric>
#include <string>

#include "exu/errors.hpp"

namespace exu::exunits {

bool is_exceptional_unit(uint64_t u, uint64_t n) {
    if (n == 0) throw precondition_error("is_exceptional_unit: n must be positive");
    u %= n;
    uint64_t one_minus_u = (n + 1 - u) % n;
    return std::gcd(u, n) == 1 && std::gcd(one_minus_u, n) == 1;
}

ExUnitSet enumerate_exunits(uint64_t n) {
    if (n == 0) throw precondition_error("enumerate_exunits: n must be positive");
    if (n > kEnumerationBound) {
        throw capacity_error("enumerate_exunits: n exceeds the enumeration bound " +
                             std::to_string(kEnumerationBound));
    }
    ExUnitSet set;
    set.n = n;
    for (uint64_t u = 0; u < n; ++u) {
        if (std::gcd(u, n) == 1 && std::gcd((n + 1 - u) % n, n) == 1) {
            set.members.push_back(u);
        }
    }
    return set;
}

Count count_exunits(const arith::Factorization& factored_n) {
    uint64_t count = 1;
    for (const auto& [p, s] : factored_n.factors) {
        if (p == 2) return Count();
        for (uint32_t i = 1; i < s; ++i) count *= p;
        count *= p - 2;
    }
    return Count(count);
}

}  // namespace exu::exunits
