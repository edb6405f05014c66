#pragma once

#include <cstdint>

#include "exu/bigint.hpp"
#include "exu/query.hpp"

namespace exu::closed_form {

// Guardrail on k: binomial rows stay tractable.
inline constexpr uint32_t kMaxK = 10'000;

// Per-prime evaluation record for the quadratic closed form. The exact
// identity
//
//     p * local_count = (p-2)^k - term_a + p * term_b + term_c
//
// holds by construction and is revalidated after every evaluation.
struct PrimeLocalBreakdown {
    uint64_t p = 0;
    uint32_t k = 0;
    uint64_t c_mod_p = 0;
    BigInt leading;  // (p-2)^k
    BigInt term_a;
    BigInt term_b;
    BigInt term_c;
    Count local_count;
};

// Number of exceptional-unit solutions of x_1^2 + ... + x_k^2 == c (mod p)
// for an odd prime p, evaluated in exact integers with the division by p
// checked exact.
PrimeLocalBreakdown local_count_e2(uint64_t p, uint32_t k, int64_t c);

// Quadratic count for any n: 0 for even n, multiplicative assembly of the
// per-prime local counts for odd n.
Count count_e2(const CongruenceQuery& q);

// Per-prime factor of the linear closed form, sign included; evaluates to
// 0 at p = 2.
Count local_count_e1(uint64_t p, uint32_t k, int64_t c);

// Linear count for any n >= 1.
Count count_e1(const CongruenceQuery& q);

// Dispatch on e; throws unsupported_exponent_error for e >= 3.
Count count(const CongruenceQuery& q);

}  // namespace exu::closed_form
