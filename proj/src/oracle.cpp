#include "exu/oracle.hpp"

#include <numeric>
#include <string>

#include "exu/arith.hpp"
#include "exu/errors.hpp"
#include "exu/exunits.hpp"

namespace exu {

CongruenceQuery::CongruenceQuery(uint64_t n_, uint32_t k_, int64_t c_, uint32_t e_)
    : n(n_), k(k_), c(0), e(e_) {
    if (n == 0) throw precondition_error("CongruenceQuery: n must be positive");
    if (k < 2) throw precondition_error("CongruenceQuery: k must be at least 2");
    if (e < 1) throw precondition_error("CongruenceQuery: e must be at least 1");
    c = arith::normalize_mod(c_, n);
}

namespace oracle {

namespace {

// #tuples = |domain|^k, checked against the guardrail.
void check_tuple_bound(size_t domain_size, uint32_t k, const char* who) {
    if (domain_size <= 1) return;  // 0^k or 1^k, any k
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (total > kNaiveBound / domain_size) {
            throw capacity_error(std::string(who) + ": |domain|^k exceeds " +
                                 std::to_string(kNaiveBound));
        }
        total *= domain_size;
    }
}

// Depth-first walk over all k-tuples, accumulating partial sums mod n.
uint64_t count_tuples(const std::vector<uint64_t>& powers, uint32_t k, uint64_t c, uint64_t n,
                      uint32_t depth, uint64_t partial) {
    if (depth == k) return partial == c ? 1 : 0;
    uint64_t hits = 0;
    for (uint64_t pw : powers) {
        uint64_t next = partial + pw;
        if (next >= n) next -= n;
        hits += count_tuples(powers, k, c, n, depth + 1, next);
    }
    return hits;
}

Count count_over_domain(const std::vector<uint64_t>& members, const CongruenceQuery& q,
                        const char* who) {
    check_tuple_bound(members.size(), q.k, who);
    if (members.empty()) return Count();
    std::vector<uint64_t> powers;
    powers.reserve(members.size());
    for (uint64_t u : members) powers.push_back(arith::power_mod((int64_t)u, q.e, q.n));
    if (members.size() == 1) {
        // single tuple; k may be huge here, so no recursion
        uint64_t sum = arith::mul_mod(q.k % q.n, powers[0], q.n);
        return Count(uint64_t{sum == q.c ? 1u : 0u});
    }
    // |domain| >= 2 and |domain|^k within the bound caps the recursion depth
    return Count(count_tuples(powers, q.k, q.c, q.n, 0, 0));
}

}  // namespace

Count count_naive(const CongruenceQuery& q) {
    auto set = exunits::enumerate_exunits(q.n);
    return count_over_domain(set.members, q, "count_naive");
}

Count count_units_naive(const CongruenceQuery& q) {
    if (q.n > exunits::kEnumerationBound) {
        throw capacity_error("count_units_naive: n exceeds the enumeration bound");
    }
    std::vector<uint64_t> units;
    for (uint64_t u = 0; u < q.n; ++u) {
        if (std::gcd(u, q.n) == 1) units.push_back(u);
    }
    return count_over_domain(units, q, "count_units_naive");
}

std::vector<Count> convolution_table(uint64_t n, uint32_t k, uint32_t e) {
    if (n == 0) throw precondition_error("convolution_table: n must be positive");
    if (k < 2) throw precondition_error("convolution_table: k must be at least 2");
    if (e < 1) throw precondition_error("convolution_table: e must be at least 1");
    if (n > kConvolutionBound) {
        throw capacity_error("convolution_table: n exceeds " + std::to_string(kConvolutionBound));
    }
    if (n == 1) return {Count(uint64_t{1})};
    auto set = exunits::enumerate_exunits(n);

    // f[r] = #{x in Z_n** : x^e == r (mod n)}
    std::vector<uint64_t> freq(n, 0);
    for (uint64_t u : set.members) freq[arith::power_mod((int64_t)u, e, n)] += 1;
    std::vector<uint64_t> support;
    for (uint64_t r = 0; r < n; ++r) {
        if (freq[r] != 0) support.push_back(r);
    }

    std::vector<Count> cur(n);
    for (uint64_t r = 0; r < n; ++r) cur[r] = Count(freq[r]);

    for (uint32_t fold = 2; fold <= k; ++fold) {
        std::vector<Count> next(n);
        for (uint64_t r = 0; r < n; ++r) {
            if (cur[r].is_zero()) continue;
            for (uint64_t t : support) {
                uint64_t idx = r + t;
                if (idx >= n) idx -= n;
                next[idx].add_mul_u64(cur[r], freq[t]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Count count_convolution(const CongruenceQuery& q) {
    return convolution_table(q.n, q.k, q.e)[q.c];
}

}  // namespace oracle
}  // namespace exu
