#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "exu/arith.hpp"
#include "exu/closed_form.hpp"
#include "exu/errors.hpp"
#include "exu/oracle.hpp"

using namespace exu;

TEST_CASE("quadratic local counts on fixed small cases") {
    auto bd = closed_form::local_count_e2(5, 2, 0);
    CHECK(bd.local_count.to_string() == "4");
    CHECK(closed_form::local_count_e2(5, 2, 2).local_count.to_string() == "1");
    CHECK(closed_form::local_count_e2(3, 2, 2).local_count.to_string() == "1");
    CHECK(closed_form::local_count_e2(3, 2, 0).local_count.is_zero());
}

TEST_CASE("breakdown satisfies p*N = (p-2)^k - A + p*B + C and the bounds") {
    for (uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 97ULL}) {
        for (uint32_t k = 2; k <= 9; ++k) {
            for (uint64_t c = 0; c < p; ++c) {
                auto bd = closed_form::local_count_e2(p, k, (int64_t)c);
                BigInt lhs = bd.local_count * BigInt(p);
                BigInt rhs = bd.leading - bd.term_a + BigInt(p) * bd.term_b + bd.term_c;
                CHECK(lhs == rhs);
                CHECK_FALSE(bd.local_count.is_negative());
                CHECK(bd.local_count <= bd.leading);
            }
        }
    }
}

TEST_CASE("quadratic local count matches the oracle for primes up to 60") {
    for (uint64_t p = 3; p <= 60; p += 2) {
        if (!arith::is_prime(p)) continue;
        for (uint32_t k = 2; k <= 5; ++k) {
            auto table = oracle::convolution_table(p, k, 2);
            for (uint64_t c = 0; c < p; ++c) {
                auto bd = closed_form::local_count_e2(p, k, (int64_t)c);
                if (bd.local_count != table[c]) {
                    FAIL("local e2 mismatch at p=", p, " k=", k, " c=", c);
                }
            }
        }
    }
}

TEST_CASE("local sums over c recover (p-2)^k for every odd prime <= 50") {
    for (uint64_t p = 3; p <= 50; p += 2) {
        if (!arith::is_prime(p)) continue;
        for (uint32_t k = 2; k <= 8; ++k) {
            Count total;
            for (uint64_t c = 0; c < p; ++c) {
                total += closed_form::local_count_e2(p, k, (int64_t)c).local_count;
            }
            CHECK(total == pow_u64(p - 2, k));
        }
    }
}

namespace {

// Independent pair count for k=2: walk x over Z_p** and count admissible y
// with y^2 == c - x^2 from a squares table. O(p) time, no shared code with
// the closed form.
uint64_t quadratic_pair_count(uint64_t p, uint64_t c) {
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y < p; ++y) chi[(unsigned __int128)y * y % p] = 1;
    uint64_t count = 0;
    for (uint64_t x = 2; x < p; ++x) {
        uint64_t t = (c + p - (uint64_t)((unsigned __int128)x * x % p)) % p;
        uint64_t sols = t == 0 ? 1 : (uint64_t)(1 + chi[t]);
        if (t == 0) sols -= 1;  // y = 0 is not a unit
        if (t == 1) sols -= 1;  // y = 1 is not an exceptional unit
        count += sols;
    }
    return count;
}

}  // namespace

TEST_CASE("local count at large primes, on both legendre evaluation paths") {
    // 65537 uses the sieved residue table; 1048583 (> 2^20) falls back to
    // Euler's criterion per term
    for (uint64_t p : {65537ULL, 1048583ULL}) {
        REQUIRE(arith::is_prime(p));
        for (uint64_t c : std::vector<uint64_t>{0, 1, 2, 17, p - 1}) {
            auto bd = closed_form::local_count_e2(p, 2, (int64_t)c);
            CHECK(bd.local_count == Count(quadratic_pair_count(p, c)));
        }
    }
}

TEST_CASE("linear local counts on fixed small cases") {
    CHECK(closed_form::local_count_e1(5, 2, 0).to_string() == "2");
    CHECK(closed_form::local_count_e1(2, 3, 1).is_zero());
    CHECK(closed_form::local_count_e1(3, 2, 1).to_string() == "1");
}

TEST_CASE("linear local count matches the oracle for primes up to 60") {
    for (uint64_t p = 2; p <= 60; ++p) {
        if (!arith::is_prime(p)) continue;
        for (uint32_t k = 2; k <= 5; ++k) {
            auto table = oracle::convolution_table(p, k, 1);
            for (uint64_t c = 0; c < p; ++c) {
                CHECK(closed_form::local_count_e1(p, k, (int64_t)c) == table[c]);
            }
        }
    }
}

TEST_CASE("count_e2 on fixed cases") {
    CHECK(closed_form::count_e2(CongruenceQuery(4, 3, 1, 2)).is_zero());
    CHECK(closed_form::count_e2(CongruenceQuery(1, 2, 0, 2)).to_string() == "1");

    // n = 45: assembled value equals 3^((2-1)(2-1)) * local(3,2,0) * local(5,2,0),
    // and both equal the convolution oracle
    auto assembled = pow_u64(3, 1) * closed_form::local_count_e2(3, 2, 0).local_count *
                     closed_form::local_count_e2(5, 2, 0).local_count;
    auto direct = closed_form::count_e2(CongruenceQuery(45, 2, 0, 2));
    CHECK(direct == assembled);
    CHECK(direct == oracle::count_convolution(CongruenceQuery(45, 2, 0, 2)));
}

TEST_CASE("count_e1 on fixed cases") {
    CHECK(closed_form::count_e1(CongruenceQuery(15, 2, 1, 1)).to_string() == "3");
    CHECK(closed_form::count_e1(CongruenceQuery(15, 2, 1, 1)) ==
          oracle::count_naive(CongruenceQuery(15, 2, 1, 1)));
    CHECK(closed_form::count_e1(CongruenceQuery(2, 5, 0, 1)).is_zero());
    CHECK(closed_form::count_e1(CongruenceQuery(1, 4, 0, 1)).to_string() == "1");
}

TEST_CASE("closed form equals the oracle for all odd n <= 99, e = 2") {
    for (uint64_t n = 1; n <= 99; n += 2) {
        for (uint32_t k : {2u, 3u}) {
            auto table = oracle::convolution_table(n, k, 2);
            for (uint64_t c = 0; c < n; ++c) {
                if (closed_form::count_e2(CongruenceQuery(n, k, (int64_t)c, 2)) != table[c]) {
                    FAIL("count_e2 mismatch at n=", n, " k=", k, " c=", c);
                }
            }
        }
    }
}

TEST_CASE("closed form equals the oracle for all n <= 99, e = 1") {
    for (uint64_t n = 1; n <= 99; ++n) {
        for (uint32_t k : {2u, 3u}) {
            auto table = oracle::convolution_table(n, k, 1);
            for (uint64_t c = 0; c < n; ++c) {
                if (closed_form::count_e1(CongruenceQuery(n, k, (int64_t)c, 1)) != table[c]) {
                    FAIL("count_e1 mismatch at n=", n, " k=", k, " c=", c);
                }
            }
        }
    }
}

TEST_CASE("multiplicative assembly over coprime pairs") {
    const std::vector<std::pair<uint64_t, uint64_t>> odd_pairs{
        {3, 5}, {5, 7}, {9, 25}, {27, 7}, {11, 45}, {13, 33}};
    for (auto [n1, n2] : odd_pairs) {
        for (uint32_t e : {1u, 2u}) {
            for (uint64_t c = 0; c < n1 * n2; ++c) {
                auto whole = closed_form::count(CongruenceQuery(n1 * n2, 3, (int64_t)c, e));
                auto left = closed_form::count(CongruenceQuery(n1, 3, (int64_t)(c % n1), e));
                auto right = closed_form::count(CongruenceQuery(n2, 3, (int64_t)(c % n2), e));
                CHECK(whole == left * right);
            }
        }
    }
    // e=1 also covers even factors
    for (uint64_t c = 0; c < 30; ++c) {
        CHECK(closed_form::count_e1(CongruenceQuery(30, 2, (int64_t)c, 1)) ==
              closed_form::count_e1(CongruenceQuery(6, 2, (int64_t)(c % 6), 1)) *
                  closed_form::count_e1(CongruenceQuery(5, 2, (int64_t)(c % 5), 1)));
    }
}

TEST_CASE("prime-power scaling up to s=3 against the oracle") {
    for (uint64_t p : {3ULL, 5ULL}) {
        uint64_t p3 = p * p * p;
        for (uint32_t e : {1u, 2u}) {
            auto table = oracle::convolution_table(p3, 2, e);
            for (uint64_t c = 0; c < p3; ++c) {
                CHECK(closed_form::count(CongruenceQuery(p3, 2, (int64_t)c, e)) == table[c]);
            }
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(closed_form::count(CongruenceQuery(5, 2, 0, 2)).to_string() == "4");
    CHECK(closed_form::count(CongruenceQuery(5, 2, 0, 1)).to_string() == "2");
    CHECK_THROWS_AS(closed_form::count(CongruenceQuery(5, 2, 0, 3)),
                    unsupported_exponent_error);
}

TEST_CASE("contract violations") {
    CHECK_THROWS_AS(closed_form::local_count_e2(2, 2, 0), precondition_error);
    CHECK_THROWS_AS(closed_form::local_count_e2(9, 2, 0), precondition_error);
    CHECK_THROWS_AS(closed_form::local_count_e1(6, 2, 0), precondition_error);
    CHECK_THROWS_AS(closed_form::count_e2(CongruenceQuery(5, closed_form::kMaxK + 1, 0, 2)),
                    capacity_error);
}

TEST_CASE("negative c reduces the same way as its canonical residue") {
    CHECK(closed_form::local_count_e2(7, 3, -2).local_count ==
          closed_form::local_count_e2(7, 3, 5).local_count);
    CHECK(closed_form::local_count_e1(7, 3, -2) == closed_form::local_count_e1(7, 3, 5));
}

TEST_CASE("assembly at a modulus with a ten-digit prime factor") {
    const uint64_t big_prime = 9999999967ULL;
    const uint64_t n = 3 * big_prime;
    for (int64_t c : {0, 1, 7}) {
        auto whole = closed_form::count_e2(CongruenceQuery(n, 2, c, 2));
        auto expected = closed_form::local_count_e2(3, 2, c).local_count *
                        closed_form::local_count_e2(big_prime, 2, c).local_count;
        CHECK(whole == expected);
    }
}
