#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "exu/arith.hpp"
#include "exu/errors.hpp"
#include "exu/exunits.hpp"
#include "exu/hensel.hpp"

using namespace exu;

namespace {

// All exceptional-unit solutions mod m by direct enumeration (test oracle).
std::vector<std::vector<uint64_t>> solution_set(uint64_t m, uint32_t k, uint64_t c, uint32_t e) {
    auto members = exunits::enumerate_exunits(m).members;
    std::vector<std::vector<uint64_t>> solutions;
    std::vector<size_t> idx(k, 0);
    if (members.empty()) return solutions;
    while (true) {
        uint64_t sum = 0;
        std::vector<uint64_t> tuple(k);
        for (uint32_t i = 0; i < k; ++i) {
            tuple[i] = members[idx[i]];
            sum = (sum + arith::power_mod((int64_t)tuple[i], e, m)) % m;
        }
        if (sum == c % m) solutions.push_back(tuple);
        uint32_t pos = 0;
        while (pos < k) {
            if (++idx[pos] < members.size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return solutions;
}

}  // namespace

TEST_CASE("lift_root fixed cases") {
    const int64_t x2_minus_2[] = {-2, 0, 1};
    auto r = hensel::lift_root(x2_minus_2, 3, 7, 2);
    CHECK(r.root == 10);  // 10^2 = 100 == 2 (mod 49)
    CHECK(r.base_root == 3);

    auto r1 = hensel::lift_root(x2_minus_2, 3, 7, 1);
    CHECK(r1.root == 3);

    const int64_t x2_minus_1[] = {-1, 0, 1};
    CHECK(hensel::lift_root(x2_minus_1, 1, 3, 2).root == 1);  // exact root persists
}

TEST_CASE("lift_root rejects moduli beyond 63 bits") {
    const int64_t x2_minus_2[] = {-2, 0, 1};
    CHECK_THROWS_AS(hensel::lift_root(x2_minus_2, 3, 7, 30), capacity_error);
}

TEST_CASE("lift_root error contract") {
    const int64_t x2_minus_2[] = {-2, 0, 1};
    CHECK_THROWS_AS(hensel::lift_root(x2_minus_2, 1, 7, 2), not_a_root_error);

    const int64_t x2[] = {0, 0, 1};
    CHECK_THROWS_AS(hensel::lift_root(x2, 0, 3, 2), singular_derivative_error);

    const int64_t x2_minus_1[] = {-1, 0, 1};
    // f'(1) = 2 == 0 (mod 2)
    CHECK_THROWS_AS(hensel::lift_root(x2_minus_1, 1, 2, 3), singular_derivative_error);

    CHECK_THROWS_AS(hensel::lift_root(x2_minus_2, 3, 6, 2), precondition_error);
}

TEST_CASE("lift_root output is the unique root in its class, scan check") {
    struct Case {
        std::vector<int64_t> coeffs;
        uint64_t p;
        uint32_t s;
    };
    for (const auto& [coeffs, p, s] : std::vector<Case>{
             {{-2, 0, 1}, 7, 4},   // x^2 - 2 mod 7^4
             {{-1, 0, 0, 1}, 5, 3},  // x^3 - 1 mod 5^3 (no singularity at x=1? f'(1)=3)
             {{3, 1, 1}, 11, 3},   // x^2 + x + 3 mod 11^3
             {{-4, 0, 1}, 3, 7},   // x^2 - 4 mod 3^7
         }) {
        uint64_t ps = 1;
        for (uint32_t i = 0; i < s; ++i) ps *= p;
        for (uint64_t a0 = 0; a0 < p; ++a0) {
            auto value_at = [&](uint64_t x, uint64_t m) {
                uint64_t acc = 0;
                for (size_t i = coeffs.size(); i-- > 0;) {
                    acc = (arith::mul_mod(acc, x, m) + arith::normalize_mod(coeffs[i], m)) % m;
                }
                return acc;
            };
            uint64_t deriv = 0;
            for (size_t i = coeffs.size(); i-- > 1;) {
                deriv = (arith::mul_mod(deriv, a0, p) +
                         arith::mul_mod(arith::normalize_mod(coeffs[i], p), i % p, p)) %
                        p;
            }
            if (value_at(a0, p) != 0 || deriv == 0) continue;
            auto lifted = hensel::lift_root(coeffs, a0, p, s);
            CHECK(lifted.root % p == a0);
            CHECK(value_at(lifted.root, ps) == 0);
            // uniqueness within the residue class
            int roots_in_class = 0;
            for (uint64_t x = a0; x < ps; x += p) {
                if (value_at(x, ps) == 0) ++roots_in_class;
            }
            CHECK(roots_in_class == 1);
        }
    }
}

TEST_CASE("lift_solution fixed case") {
    // base solution (2,2) of x^2+y^2 == 2 (mod 3); offset 3 on the first
    // coordinate; the scan over {2,5,8} shows a'=2 is the unique partner:
    // 25 + 4 = 29 == 2 (mod 9)
    std::vector<uint64_t> sol{2, 2};
    std::vector<uint64_t> offsets{3};
    auto lifted = hensel::lift_solution(sol, CongruenceQuery(3, 2, 2, 2), 2, offsets);
    REQUIRE(lifted.size() == 2);
    CHECK(lifted[0] == 5);
    CHECK(lifted[1] == 2);

    uint64_t scan_matches = 0;
    for (uint64_t a = 2; a < 9; a += 3) {
        if ((25 + a * a) % 9 == 2) {
            ++scan_matches;
            CHECK(a == lifted[1]);
        }
    }
    CHECK(scan_matches == 1);
}

TEST_CASE("lift_solution with s=1 or zero offsets returns the base solution") {
    std::vector<uint64_t> sol{2, 3, 4};
    auto same = hensel::lift_solution(sol, CongruenceQuery(5, 3, 4, 2), 1, {});
    CHECK(same == sol);
}

TEST_CASE("lift_solution hypothesis violations") {
    std::vector<uint64_t> sol{1, 1};
    CHECK_THROWS_AS(hensel::lift_solution(sol, CongruenceQuery(2, 2, 0, 1), 2, {}),
                    hypothesis_error);
    std::vector<uint64_t> sol3{2, 2};
    CHECK_THROWS_AS(hensel::lift_solution(sol3, CongruenceQuery(3, 2, 2, 3), 2, {}),
                    hypothesis_error);
    CHECK_THROWS_AS(hensel::lift_solution(sol3, CongruenceQuery(3, 2, 2, 6), 2, {}),
                    hypothesis_error);
    // non-solution rejected
    CHECK_THROWS_AS(hensel::lift_solution(sol3, CongruenceQuery(3, 2, 0, 2), 2, {}),
                    precondition_error);
}

TEST_CASE("lifting all base solutions over all offsets partitions S(p^2)") {
    for (uint64_t p : {3ULL, 5ULL}) {
        for (uint32_t e : {1u, 2u}) {
            for (uint32_t k : {2u, 3u}) {
                uint64_t ps = p * p;
                for (uint64_t c = 0; c < ps; ++c) {
                    auto base = solution_set(p, k, c % p, e);
                    auto target = solution_set(ps, k, c, e);

                    std::set<std::vector<uint64_t>> expected(target.begin(), target.end());
                    std::set<std::vector<uint64_t>> produced;

                    // enumerate all (k-1)-tuples of offsets in pZ_{p^2}
                    uint64_t tuples = 1;
                    for (uint32_t i = 0; i + 1 < k; ++i) tuples *= p;
                    for (const auto& sol : base) {
                        // base solves == c (mod p) but we need == c (mod p^2):
                        // the lift fixes the last coordinate, so feed c itself
                        for (uint64_t code = 0; code < tuples; ++code) {
                            uint64_t rest = code;
                            std::vector<uint64_t> offsets(k - 1);
                            for (uint32_t i = 0; i + 1 < k; ++i) {
                                offsets[i] = (rest % p) * p;
                                rest /= p;
                            }
                            auto lifted = hensel::lift_solution(
                                sol, CongruenceQuery(p, k, (int64_t)c, e), 2, offsets,
                                (int64_t)c);
                            bool fresh = produced.insert(lifted).second;
                            CHECK(fresh);  // distinctness
                        }
                    }
                    CHECK(produced.size() == base.size() * tuples);
                    CHECK(produced == expected);  // partition covers exactly
                }
            }
        }
    }
}
