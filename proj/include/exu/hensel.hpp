#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "exu/query.hpp"

namespace exu::hensel {

// A root of f lifted from mod p to mod p^s.
struct LiftResult {
    uint64_t root = 0;       // canonical residue mod p^s
    uint64_t base_root = 0;  // the residue mod p it refines
    uint64_t p = 0;
    uint32_t s = 1;
};

// Newton-lift the simple root a0 of f (coefficients c0..cd, constant term
// first) from mod p to the unique root mod p^s congruent to a0 mod p.
// Requires f(a0) == 0 (mod p) and f'(a0) != 0 (mod p); precision doubles
// each step. p^s must fit in 63 bits.
LiftResult lift_root(std::span<const int64_t> coeffs, uint64_t a0, uint64_t p, uint32_t s);

// Lift a full solution of x_1^e + ... + x_k^e == c (mod p) over Z_p** to a
// solution mod p^target_s: add the given multiples-of-p offsets to the
// first k-1 coordinates, then solve for the last coordinate with
// lift_root. Requires gcd(p, e) = 1 (and p odd, else there is nothing to
// lift). Empty offsets mean all-zero.
//
// q carries the base congruence (n = p), whose c is canonical mod p only;
// when the intended target is a specific residue mod p^target_s, pass it
// as target_c (it must reduce to q.c mod p). Defaults to q.c itself.
std::vector<uint64_t> lift_solution(std::span<const uint64_t> sol, const CongruenceQuery& q,
                                    uint32_t target_s, std::span<const uint64_t> offsets,
                                    std::optional<int64_t> target_c = std::nullopt);

}  // namespace exu::hensel
