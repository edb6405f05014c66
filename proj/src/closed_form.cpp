#include "exu/closed_form.hpp"

#include <string>
#include <vector>

#include "exu/arith.hpp"
#include "exu/errors.hpp"

namespace exu::closed_form {

namespace {

using u64 = uint64_t;

// Full binomial row C(m, 0..m) by the running-product recurrence.
std::vector<BigInt> binomial_row(uint32_t m) {
    std::vector<BigInt> row(m + 1);
    row[0] = BigInt(u64{1});
    for (uint32_t j = 1; j <= m; ++j) {
        row[j] = row[j - 1];
        row[j].mul_u64(m - j + 1);
        row[j].div_exact_u64(j);
    }
    return row;
}

// Legendre values for the inner character sums. Small p gets a residue
// table sieved from squares; large p falls back to Euler's criterion.
class LegendreEvaluator {
public:
    explicit LegendreEvaluator(u64 p) : p_(p) {
        if (p <= kTableBound) {
            table_.assign(p, -1);
            table_[0] = 0;
            for (u64 x = 1; x < p; ++x) table_[arith::mul_mod(x, x, p)] = 1;
        }
    }

    int at(u64 residue) const {
        if (!table_.empty()) return table_[residue];
        return arith::detail::legendre_residue(residue, p_);
    }

private:
    static constexpr u64 kTableBound = 1u << 20;
    u64 p_;
    std::vector<int8_t> table_;
};

// (t - cp) mod p without overflow for any p < 2^64 and small t.
u64 residue_of_difference(u64 t, u64 cp, u64 p) {
    if (t >= cp) return (t - cp) % p;
    return p - (cp - t);  // cp - t < p, so the result is in (0, p)
}

void validate_k(uint32_t k) {
    if (k < 2) throw precondition_error("closed form: k must be at least 2");
    if (k > kMaxK) {
        throw capacity_error("closed form: k exceeds the guardrail " + std::to_string(kMaxK));
    }
}

PrimeLocalBreakdown local_e2_at_residue(u64 p, uint32_t k, u64 cp) {
    // Per-prime quadratic count in exact integers:
    //
    //   N(p) = ((-1)^k / p) * [ (2-p)^k
    //          - sum_{i=0}^{floor(k/2)}   s(i)   p^i     C(k,2i)
    //                (2^{k-2i} - p * sum_{t == cp (p), 0<=t<=k-2i} C(k-2i,t))
    //          - sum_{i=0}^{floor((k-1)/2)} s(i+1) p^{i+1} C(k,2i+1)
    //                sum_{t != cp (p), 0<=t<=k-2i-1} C(k-2i-1,t) (t-cp | p) ]
    //
    // with s(i) = (-1)^{(p-1)i/2}. Rearranged into
    //   p * N(p) = (p-2)^k - A + p*B + C
    // so the division by p can be checked exact and the terms reported.
    PrimeLocalBreakdown bd;
    bd.p = p;
    bd.k = k;
    bd.c_mod_p = cp;
    bd.leading = pow_u64(p - 2, k);

    const bool sign_alternates = ((p - 1) / 2) % 2 == 1;  // p == 3 (mod 4)
    LegendreEvaluator legendre(p);
    const std::vector<BigInt> row_k = binomial_row(k);

    BigInt sum_a, sum_b, sum_c;
    for (uint32_t i = 0; 2 * i <= k; ++i) {
        const bool neg_i = sign_alternates && (i % 2 == 1);
        const BigInt p_pow_i = pow_u64(p, i);

        // even part: contributes to A and B
        {
            const uint32_t m = k - 2 * i;
            BigInt common = row_k[2 * i] * p_pow_i;

            BigInt a_term = common * pow_u64(2, m);
            if (neg_i) sum_a -= a_term; else sum_a += a_term;

            const std::vector<BigInt> row_m = binomial_row(m);
            BigInt congruent_sum;
            u64 t = cp;
            while (t <= m) {
                congruent_sum += row_m[t];
                if (p > m - t) break;
                t += p;
            }
            if (!congruent_sum.is_zero()) {
                BigInt b_term = common * congruent_sum;
                if (neg_i) sum_b -= b_term; else sum_b += b_term;
            }
        }

        // odd part: contributes to C
        if (2 * i + 1 <= k) {
            const uint32_t m = k - 2 * i - 1;
            const bool neg_i1 = sign_alternates && ((i + 1) % 2 == 1);
            const std::vector<BigInt> row_m = binomial_row(m);
            BigInt char_sum;
            for (u64 t = 0; t <= m; ++t) {
                u64 r = residue_of_difference(t, cp, p);
                if (r == 0) continue;
                int chi = legendre.at(r);
                if (chi > 0) char_sum += row_m[t];
                else char_sum -= row_m[t];
            }
            if (!char_sum.is_zero()) {
                BigInt c_term = row_k[2 * i + 1] * p_pow_i;
                c_term.mul_u64(p);
                c_term *= char_sum;
                if (neg_i1) sum_c -= c_term; else sum_c += c_term;
            }
        }
    }

    // outer signs: A and B carry (-1)^k, C carries (-1)^(k-1)
    const bool k_odd = k % 2 == 1;
    bd.term_a = k_odd ? -sum_a : sum_a;
    bd.term_b = k_odd ? -sum_b : sum_b;
    bd.term_c = k_odd ? sum_c : -sum_c;

    BigInt numerator = bd.leading - bd.term_a + bd.term_c;
    if (numerator.divmod_u64(p) != 0) {
        throw internal_error("local_count_e2: bracket not divisible by p (p=" + std::to_string(p) +
                             ", k=" + std::to_string(k) + ", c=" + std::to_string(cp) + ")");
    }
    bd.local_count = numerator + bd.term_b;
    if (bd.local_count.is_negative() || bd.local_count > bd.leading) {
        throw internal_error("local_count_e2: count outside [0, (p-2)^k] (p=" + std::to_string(p) +
                             ", k=" + std::to_string(k) + ", c=" + std::to_string(cp) + ")");
    }
    return bd;
}

Count local_e1_at_residue(u64 p, uint32_t k, u64 cp) {
    // ((-1)^k / p) * [ p * sum_{j == cp (p), 0<=j<=k} C(k,j) + (2-p)^k - 2^k ]
    const std::vector<BigInt> row_k = binomial_row(k);
    BigInt congruent_sum;
    u64 j = cp;
    while (j <= k) {
        congruent_sum += row_k[j];
        if (p > k - j) break;
        j += p;
    }
    congruent_sum.mul_u64(p);

    BigInt two_minus_p_pow = pow_u64(p - 2, k);  // |2-p|^k
    if (k % 2 == 1) two_minus_p_pow = -two_minus_p_pow;
    BigInt bracket = congruent_sum + two_minus_p_pow - pow_u64(2, k);
    if (k % 2 == 1) bracket = -bracket;
    if (bracket.divmod_u64(p) != 0) {
        throw internal_error("local_count_e1: bracket not divisible by p (p=" + std::to_string(p) +
                             ", k=" + std::to_string(k) + ", c=" + std::to_string(cp) + ")");
    }
    if (bracket.is_negative()) {
        throw internal_error("local_count_e1: negative count (p=" + std::to_string(p) +
                             ", k=" + std::to_string(k) + ", c=" + std::to_string(cp) + ")");
    }
    return bracket;
}

}  // namespace

PrimeLocalBreakdown local_count_e2(uint64_t p, uint32_t k, int64_t c) {
    if (p == 2 || !arith::is_prime(p)) {
        throw precondition_error("local_count_e2: p must be an odd prime, got " +
                                 std::to_string(p));
    }
    validate_k(k);
    return local_e2_at_residue(p, k, arith::normalize_mod(c, p));
}

Count local_count_e1(uint64_t p, uint32_t k, int64_t c) {
    if (!arith::is_prime(p)) {
        throw precondition_error("local_count_e1: p must be prime, got " + std::to_string(p));
    }
    validate_k(k);
    return local_e1_at_residue(p, k, arith::normalize_mod(c, p));
}

Count count_e2(const CongruenceQuery& q) {
    if (q.e != 2) throw precondition_error("count_e2: query exponent must be 2");
    validate_k(q.k);
    if (q.n == 1) return Count(uint64_t{1});
    if (q.n % 2 == 0) return Count();  // no exceptional units mod even n

    auto factored = arith::factorize(q.n);
    Count total(uint64_t{1});
    for (const auto& [p, s] : factored.factors) {
        auto bd = local_e2_at_residue(p, q.k, q.c % p);
        if (bd.local_count.is_zero()) return Count();
        total *= pow_u64(p, (u64)(q.k - 1) * (s - 1));
        total *= bd.local_count;
    }
    return total;
}

Count count_e1(const CongruenceQuery& q) {
    if (q.e != 1) throw precondition_error("count_e1: query exponent must be 1");
    validate_k(q.k);
    if (q.n == 1) return Count(uint64_t{1});

    auto factored = arith::factorize(q.n);
    Count total(uint64_t{1});
    for (const auto& [p, s] : factored.factors) {
        Count local = local_e1_at_residue(p, q.k, q.c % p);
        if (local.is_zero()) return Count();
        total *= pow_u64(p, (u64)(q.k - 1) * (s - 1));
        total *= local;
    }
    return total;
}

Count count(const CongruenceQuery& q) {
    if (q.e == 1) return count_e1(q);
    if (q.e == 2) return count_e2(q);
    throw unsupported_exponent_error(
        "no closed form for e = " + std::to_string(q.e) +
        "; use the convolution or naive oracle methods instead");
}

}  // namespace exu::closed_form
