#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "exu/bigint.hpp"

namespace exu::arith {

// Canonical prime-power decomposition of a positive 64-bit integer.
// Primes strictly increasing, exponents >= 1, empty list for value 1.
struct Factorization {
    uint64_t value = 1;
    std::vector<std::pair<uint64_t, uint32_t>> factors;

    // Number of distinct prime divisors.
    size_t omega() const { return factors.size(); }

    // Exponent of p in value (0 if p does not divide it).
    uint32_t nu(uint64_t p) const;
};

// (a * b) mod m with a double-width intermediate; m >= 1.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);

// base^exp mod m, square-and-multiply; negative bases are reduced first.
uint64_t power_mod(int64_t base, uint64_t exp, uint64_t m);

// Canonical residue of a signed value, valid for any m >= 1 including
// m > 2^63.
uint64_t normalize_mod(int64_t value, uint64_t m);

// Deterministic for all m < 2^64 (fixed Miller-Rabin witness set).
bool is_prime(uint64_t m);

// Trial division by primes up to 10^6, then Pollard rho on what remains.
Factorization factorize(uint64_t m);

// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
// Rejects p = 2 and composite p.
int legendre(int64_t a, uint64_t p);

namespace detail {
// Same, for a canonical residue and a trusted odd prime p.
int legendre_residue(uint64_t a, uint64_t p);
}  // namespace detail

// Unique x in [0, prod m_i) with x == b_i (mod m_i) for all i. Moduli must
// be pairwise coprime and their product must fit in 64 bits.
uint64_t crt_solve(std::span<const std::pair<int64_t, uint64_t>> congruences);

// Exact binomial coefficient; 0 when x > t.
BigInt binomial(uint64_t t, uint64_t x);

}  // namespace exu::arith
