#pragma once

#include <cstdint>

namespace exu {

// One counting problem: x_1^e + ... + x_k^e == c (mod n) with every x_i an
// exceptional unit. c is canonicalized into [0, n) at construction.
struct CongruenceQuery {
    uint64_t n;
    uint32_t k;
    uint64_t c;
    uint32_t e;

    CongruenceQuery(uint64_t n, uint32_t k, int64_t c, uint32_t e);
};

}  // namespace exu
