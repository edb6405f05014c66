#pragma once

#include <complex>
#include <cstdint>

namespace exu::charsums {

// One numerically evaluated exponential-sum identity: the direct summation
// next to its predicted closed value and their distance.
struct SumCheck {
    uint64_t p = 0;
    uint64_t alpha = 0;  // canonical residue, nonzero mod p
    std::complex<double> computed;
    std::complex<double> predicted;
    double residual = 0.0;
};

// Verification tolerance for a given prime: rounding grows with p.
double tolerance_for(uint64_t p);

// eps_p: 1 for p == 1 (mod 4), i for p == 3 (mod 4).
std::complex<double> quartic_sign(uint64_t p);

// sum_{x=0}^{p-1} e(alpha x^2 / p) against eps_p sqrt(p) (alpha/p).
SumCheck gauss_sum(uint64_t p, int64_t alpha);

// sum_{x=1}^{p-1} (x/p) e(alpha x / p) against the same closed value.
SumCheck char_sum(uint64_t p, int64_t alpha);

// sum_{x=2}^{p-1} e(x^2 t / p) against eps_p sqrt(p) (t/p) - e(t/p) - 1.
SumCheck truncated_square_sum(uint64_t p, int64_t t);

}  // namespace exu::charsums
