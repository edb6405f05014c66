#include "exu/hensel.hpp"

#include <algorithm>
#include <string>

#include "exu/arith.hpp"
#include "exu/errors.hpp"
#include "exu/exunits.hpp"

namespace exu::hensel {

namespace {

using u64 = uint64_t;

// p^s, capped so signed intermediates stay safe.
u64 prime_power(u64 p, uint32_t s) {
    u64 m = 1;
    for (uint32_t i = 0; i < s; ++i) {
        if (m > (u64{1} << 62) / p) {
            throw capacity_error("hensel: p^s exceeds 63 bits");
        }
        m *= p;
    }
    return m;
}

u64 eval_poly(std::span<const int64_t> coeffs, u64 x, u64 m) {
    // Horner, highest coefficient first
    u64 acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = arith::mul_mod(acc, x, m);
        u64 c = arith::normalize_mod(coeffs[i], m);
        acc += c;
        if (acc >= m) acc -= m;
    }
    return acc;
}

u64 eval_derivative(std::span<const int64_t> coeffs, u64 x, u64 m) {
    u64 acc = 0;
    for (size_t i = coeffs.size(); i-- > 1;) {
        acc = arith::mul_mod(acc, x, m);
        u64 c = arith::mul_mod(arith::normalize_mod(coeffs[i], m), i % m, m);
        acc += c;
        if (acc >= m) acc -= m;
    }
    return acc;
}

u64 inverse_mod_prime_power(u64 a, u64 m) {
    // extended Euclid; a is coprime to m by the nonsingularity check
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 quot = r / new_r;
        __int128 tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += m;
    return (u64)t;
}

}  // namespace

LiftResult lift_root(std::span<const int64_t> coeffs, uint64_t a0, uint64_t p, uint32_t s) {
    if (!arith::is_prime(p)) {
        throw precondition_error("lift_root: p must be prime, got " + std::to_string(p));
    }
    if (s == 0) throw precondition_error("lift_root: s must be positive");
    const u64 modulus = prime_power(p, s);
    a0 %= p;
    if (eval_poly(coeffs, a0, p) != 0) {
        throw not_a_root_error("lift_root: f(a0) != 0 (mod p)");
    }
    if (eval_derivative(coeffs, a0, p) == 0) {
        throw singular_derivative_error("lift_root: f'(a0) == 0 (mod p)");
    }

    // Newton steps, doubling the precision until p^s is reached.
    u64 x = a0;
    u64 cur = p;
    uint32_t t = 1;
    while (t < s) {
        t = std::min(2 * t, s);
        cur = prime_power(p, t);
        u64 fx = eval_poly(coeffs, x, cur);
        u64 dfx = eval_derivative(coeffs, x, cur);
        u64 step = arith::mul_mod(fx, inverse_mod_prime_power(dfx, cur), cur);
        x = (x + cur - step) % cur;
    }
    if (eval_poly(coeffs, x, modulus) != 0) {
        throw internal_error("lift_root: Newton iteration failed to converge");
    }
    return LiftResult{x, a0, p, s};
}

std::vector<uint64_t> lift_solution(std::span<const uint64_t> sol, const CongruenceQuery& q,
                                    uint32_t target_s, std::span<const uint64_t> offsets,
                                    std::optional<int64_t> target_c) {
    const u64 p = q.n;
    if (!arith::is_prime(p)) {
        throw precondition_error("lift_solution: q.n must be prime, got " + std::to_string(p));
    }
    if (p == 2 || q.e % p == 0) {
        throw hypothesis_error("lift_solution: requires an odd prime p coprime to e");
    }
    if (target_s == 0) throw precondition_error("lift_solution: target_s must be positive");
    if (sol.size() != q.k) {
        throw precondition_error("lift_solution: solution tuple must have k coordinates");
    }
    if (!offsets.empty() && offsets.size() != (size_t)q.k - 1) {
        throw precondition_error("lift_solution: offsets must have k-1 entries (or none)");
    }
    const u64 modulus = prime_power(p, target_s);
    const u64 target = target_c ? arith::normalize_mod(*target_c, modulus) : q.c;
    if (target % p != q.c) {
        throw precondition_error("lift_solution: target_c does not reduce to q.c mod p");
    }

    u64 partial = 0;  // sum of the first k-1 lifted e-th powers mod p^s
    std::vector<u64> lifted(q.k, 0);
    for (uint32_t i = 0; i + 1 < q.k; ++i) {
        u64 a = sol[i] % p;
        if (!exunits::is_exceptional_unit(a, p)) {
            throw precondition_error("lift_solution: coordinate " + std::to_string(i) +
                                     " is not an exceptional unit mod p");
        }
        u64 b = offsets.empty() ? 0 : offsets[i];
        if (b % p != 0 || b >= modulus) {
            throw precondition_error("lift_solution: offsets must be multiples of p below p^s");
        }
        lifted[i] = a + b;  // < p^s since b is a multiple of p below p^s
        partial = (partial + arith::power_mod((int64_t)lifted[i], q.e, modulus)) % modulus;
    }

    u64 last = sol[q.k - 1] % p;
    if (!exunits::is_exceptional_unit(last, p)) {
        throw precondition_error("lift_solution: last coordinate is not an exceptional unit mod p");
    }
    u64 total_mod_p = (partial + arith::power_mod((int64_t)last, q.e, p)) % p;
    if (total_mod_p != q.c % p) {
        throw precondition_error("lift_solution: tuple does not solve the congruence mod p");
    }

    // f(x) = x^e + (partial - c), solved for the last coordinate
    std::vector<int64_t> coeffs(q.e + 1, 0);
    u64 constant = (partial + modulus - target) % modulus;
    coeffs[0] = (int64_t)constant;  // modulus < 2^63 keeps this safe
    coeffs[q.e] = 1;
    lifted[q.k - 1] = lift_root(coeffs, last, p, target_s).root;
    return lifted;
}

}  // namespace exu::hensel
