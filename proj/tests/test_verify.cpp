#include <doctest.h>

#include <cstdint>
#include <vector>

#include "exu/verify.hpp"

using namespace exu;

TEST_CASE("campaign reports zero mismatches when routes agree") {
    std::vector<uint32_t> ks{2, 3};
    auto result = verify::run_campaign(30, ks, 2, verify::closed_form_table_fn(),
                                       verify::convolution_table_fn(), 2);
    CHECK(result.mismatches.empty());
    // sum over n of n, per k
    CHECK(result.comparisons == 2 * (30 * 31 / 2));
}

TEST_CASE("campaign pinpoints an injected disagreement") {
    std::vector<uint32_t> ks{2};
    auto broken = [](uint64_t n, uint32_t k, uint32_t e) {
        auto table = verify::convolution_table_fn()(n, k, e);
        if (n == 7) table[3] += Count(uint64_t{1});
        return table;
    };
    auto result =
        verify::run_campaign(10, ks, 2, broken, verify::convolution_table_fn(), 1);
    REQUIRE(result.mismatches.size() == 1);
    CHECK(result.mismatches[0].n == 7);
    CHECK(result.mismatches[0].k == 2);
    CHECK(result.mismatches[0].c == 3);
    CHECK(result.mismatches[0].e == 2);
}

TEST_CASE("campaign with max_n 1 runs a single comparison per k") {
    std::vector<uint32_t> ks{2};
    auto result = verify::run_campaign(1, ks, 2, verify::closed_form_table_fn(),
                                       verify::convolution_table_fn(), 1);
    CHECK(result.comparisons == 1);
    CHECK(result.mismatches.empty());
}
