#include "exu/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "exu/errors.hpp"

namespace exu::arith {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialDivisionBound = 1'000'000;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<bool> composite(kTrialDivisionBound + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= kTrialDivisionBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Miller-Rabin witnesses covering all 64-bit inputs.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_witness(u64 a, u64 n, u64 d, int r) {
    u64 x = power_mod((int64_t)(a % n), d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// Brent's cycle-finding variant with batched gcds. n must be odd,
// composite, and free of factors <= 37.
u64 pollard_rho(u64 n) {
    u64 seed = n ^ 0x9e3779b97f4a7c15ULL;
    auto next_rand = [&seed]() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        return seed;
    };
    while (true) {
        u64 c = next_rand() % (n - 2) + 1;
        auto f = [n, c](u64 x) { return (u64)(((u128)x * x + c) % n); };
        u64 x = next_rand() % n;
        u64 y = x, q = 1, g = 1, xs = 0;
        const u64 m = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += m) {
                xs = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // replay one step at a time from the saved point
            g = 1;
            u64 ys = xs;
            while (g == 1) {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_large(u64 n, std::map<u64, uint32_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    u64 d = pollard_rho(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

// Modular inverse of a mod m, gcd(a, m) = 1.
u64 inverse_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 quot = r / new_r;
        __int128 tmp_t = t - quot * new_t;
        t = new_t;
        new_t = tmp_t;
        __int128 tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw precondition_error("inverse_mod: arguments not coprime");
    if (t < 0) t += m;
    return (u64)t;
}

}  // namespace

uint32_t Factorization::nu(uint64_t p) const {
    for (const auto& [prime, exp] : factors) {
        if (prime == p) return exp;
    }
    return 0;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return (u64)((u128)a * b % m);
}

uint64_t normalize_mod(int64_t value, uint64_t m) {
    if (m == 0) throw precondition_error("normalize_mod: modulus must be positive");
    if (value >= 0) return (u64)value % m;
    u64 mag = (u64)(-(value + 1)) + 1;  // |value|, safe for INT64_MIN
    u64 r = mag % m;
    return r == 0 ? 0 : m - r;
}

uint64_t power_mod(int64_t base, uint64_t exp, uint64_t m) {
    if (m == 0) throw precondition_error("power_mod: modulus must be positive");
    if (m == 1) return 0;
    u64 b = normalize_mod(base, m);
    u64 result = 1;
    while (exp) {
        if (exp & 1) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(uint64_t m) {
    if (m < 2) return false;
    for (u64 p : kWitnesses) {
        if (m % p == 0) return m == p;
    }
    u64 d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : kWitnesses) {
        if (miller_rabin_witness(a, m, d, r)) return false;
    }
    return true;
}

Factorization factorize(uint64_t m) {
    if (m == 0) throw precondition_error("factorize: input must be positive");
    Factorization out;
    out.value = m;
    if (m == 1) return out;
    std::map<u64, uint32_t> acc;
    for (u64 p : small_primes()) {
        if (p * p > m) break;
        while (m % p == 0) {
            m /= p;
            acc[p] += 1;
        }
    }
    // whatever remains has no prime factor <= 10^6
    if (m > 1) factor_large(m, acc);
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

int legendre(int64_t a, uint64_t p) {
    if (p == 2 || !is_prime(p)) {
        throw precondition_error("legendre: p must be an odd prime, got " + std::to_string(p));
    }
    return detail::legendre_residue(normalize_mod(a, p), p);
}

namespace detail {
int legendre_residue(uint64_t a, uint64_t p) {
    if (a == 0) return 0;
    u64 e = power_mod((int64_t)a, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw internal_error("legendre: Euler criterion returned a nonunit; p is not prime");
}
}  // namespace detail

uint64_t crt_solve(std::span<const std::pair<int64_t, uint64_t>> congruences) {
    u64 modulus = 1;
    u64 x = 0;
    for (const auto& [raw_b, m] : congruences) {
        if (m == 0) throw precondition_error("crt_solve: moduli must be positive");
        if (std::gcd(modulus, m) != 1) {
            throw precondition_error("crt_solve: moduli are not pairwise coprime");
        }
        if (m > 1 && modulus > UINT64_MAX / m) {
            throw capacity_error("crt_solve: modulus product exceeds 64 bits");
        }
        u64 b = normalize_mod(raw_b, m);
        // x' = x + modulus * t with t == (b - x) / modulus (mod m)
        u64 diff = (b + m - x % m) % m;
        u64 t = mul_mod(diff, inverse_mod(modulus % m, m), m);
        x += modulus * t;
        modulus *= m;
    }
    return x;
}

BigInt binomial(uint64_t t, uint64_t x) {
    if (x > t) return BigInt();
    x = std::min(x, t - x);
    BigInt out(uint64_t{1});
    for (u64 i = 1; i <= x; ++i) {
        out.mul_u64(t - x + i);
        out.div_exact_u64(i);
    }
    return out;
}

}  // namespace exu::arith
