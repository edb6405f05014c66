#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "exu/bigint.hpp"

namespace exu::verify {

struct Mismatch {
    uint64_t n = 0;
    uint32_t k = 0;
    uint64_t c = 0;
    uint32_t e = 0;
    std::string closed;
    std::string oracle;
};

struct CampaignResult {
    uint64_t comparisons = 0;
    std::vector<Mismatch> mismatches;  // sorted by (n, k, c)
};

// Produces the counts for every c in [0, n) for one (n, k, e).
using TableFn = std::function<std::vector<Count>(uint64_t n, uint32_t k, uint32_t e)>;

// Compare two counting routes over every n in [1, max_n], every k in ks,
// every c. Work fans out over n to a bounded pool; output order is
// deterministic.
CampaignResult run_campaign(uint64_t max_n, std::span<const uint32_t> ks, uint32_t e,
                            const TableFn& closed, const TableFn& oracle, unsigned threads);

// The production pair: closed form vs convolution oracle.
TableFn closed_form_table_fn();
TableFn convolution_table_fn();

}  // namespace exu::verify
