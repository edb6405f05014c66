#include "exu/verify.hpp"

#include "exu/closed_form.hpp"
#include "exu/oracle.hpp"
#include "exu/parallel.hpp"

namespace exu::verify {

CampaignResult run_campaign(uint64_t max_n, std::span<const uint32_t> ks, uint32_t e,
                            const TableFn& closed, const TableFn& oracle, unsigned threads) {
    std::vector<std::vector<Mismatch>> per_n(max_n);
    std::vector<uint64_t> compared(max_n, 0);
    std::vector<uint32_t> k_list(ks.begin(), ks.end());

    parallel_for(
        max_n,
        [&](size_t idx) {
            uint64_t n = idx + 1;
            for (uint32_t k : k_list) {
                auto lhs = closed(n, k, e);
                auto rhs = oracle(n, k, e);
                for (uint64_t c = 0; c < n; ++c) {
                    compared[idx] += 1;
                    if (lhs[c] != rhs[c]) {
                        per_n[idx].push_back(
                            Mismatch{n, k, c, e, lhs[c].to_string(), rhs[c].to_string()});
                    }
                }
            }
        },
        threads);

    CampaignResult result;
    for (size_t idx = 0; idx < max_n; ++idx) {
        result.comparisons += compared[idx];
        for (auto& m : per_n[idx]) result.mismatches.push_back(std::move(m));
    }
    return result;
}

TableFn closed_form_table_fn() {
    return [](uint64_t n, uint32_t k, uint32_t e) {
        std::vector<Count> table(n);
        for (uint64_t c = 0; c < n; ++c) {
            table[c] = closed_form::count(CongruenceQuery(n, k, (int64_t)c, e));
        }
        return table;
    };
}

TableFn convolution_table_fn() {
    return [](uint64_t n, uint32_t k, uint32_t e) { return oracle::convolution_table(n, k, e); };
}

}  // namespace exu::verify
