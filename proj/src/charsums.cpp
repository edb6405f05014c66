#include "exu/charsums.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "exu/arith.hpp"
#include "exu/errors.hpp"

namespace exu::charsums {

namespace {

using u64 = uint64_t;

// Kahan-compensated accumulation, one compensation per component.
struct CompensatedSum {
    double value = 0.0;
    double compensation = 0.0;

    void add(double term) {
        double y = term - compensation;
        double t = value + y;
        compensation = (t - value) - y;
        value = t;
    }
};

struct ComplexAccumulator {
    CompensatedSum re, im;

    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> get() const { return {re.value, im.value}; }
};

// e(num / p) from the reduced exponent, so the phase never drifts.
std::complex<double> unit_root(u64 num, u64 p) {
    double angle = 2.0 * std::numbers::pi * (double)num / (double)p;
    return {std::cos(angle), std::sin(angle)};
}

u64 require_odd_prime_and_unit(u64 p, int64_t raw, const char* who) {
    if (p == 2 || !arith::is_prime(p)) {
        throw precondition_error(std::string(who) + ": p must be an odd prime, got " +
                                 std::to_string(p));
    }
    u64 a = arith::normalize_mod(raw, p);
    if (a == 0) {
        throw precondition_error(std::string(who) + ": argument must not be divisible by p");
    }
    return a;
}

// Legendre row sieved from squares; entry 0 unused by the callers.
std::vector<int8_t> legendre_row(u64 p) {
    std::vector<int8_t> row(p, -1);
    row[0] = 0;
    for (u64 x = 1; x < p; ++x) row[arith::mul_mod(x, x, p)] = 1;
    return row;
}

}  // namespace

double tolerance_for(uint64_t p) { return p < 500 ? 1e-6 : 1e-4; }

std::complex<double> quartic_sign(uint64_t p) {
    return p % 4 == 1 ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 1.0};
}

SumCheck gauss_sum(uint64_t p, int64_t alpha) {
    u64 a = require_odd_prime_and_unit(p, alpha, "gauss_sum");
    ComplexAccumulator acc;
    for (u64 x = 0; x < p; ++x) {
        acc.add(unit_root(arith::mul_mod(a, arith::mul_mod(x, x, p), p), p));
    }
    SumCheck check;
    check.p = p;
    check.alpha = a;
    check.computed = acc.get();
    check.predicted =
        quartic_sign(p) * std::sqrt((double)p) * (double)arith::detail::legendre_residue(a, p);
    check.residual = std::abs(check.computed - check.predicted);
    return check;
}

SumCheck char_sum(uint64_t p, int64_t alpha) {
    u64 a = require_odd_prime_and_unit(p, alpha, "char_sum");
    auto chi = legendre_row(p);
    ComplexAccumulator acc;
    for (u64 x = 1; x < p; ++x) {
        auto term = unit_root(arith::mul_mod(a, x, p), p);
        acc.add(chi[x] > 0 ? term : -term);
    }
    SumCheck check;
    check.p = p;
    check.alpha = a;
    check.computed = acc.get();
    check.predicted =
        quartic_sign(p) * std::sqrt((double)p) * (double)arith::detail::legendre_residue(a, p);
    check.residual = std::abs(check.computed - check.predicted);
    return check;
}

SumCheck truncated_square_sum(uint64_t p, int64_t t) {
    u64 a = require_odd_prime_and_unit(p, t, "truncated_square_sum");
    ComplexAccumulator acc;
    for (u64 x = 2; x < p; ++x) {
        acc.add(unit_root(arith::mul_mod(a, arith::mul_mod(x, x, p), p), p));
    }
    SumCheck check;
    check.p = p;
    check.alpha = a;
    check.computed = acc.get();
    check.predicted = quartic_sign(p) * std::sqrt((double)p) *
                          (double)arith::detail::legendre_residue(a, p) -
                      unit_root(a, p) - std::complex<double>{1.0, 0.0};
    check.residual = std::abs(check.computed - check.predicted);
    return check;
}

}  // namespace exu::charsums
