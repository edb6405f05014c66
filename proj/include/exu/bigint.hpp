#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace exu {

// Signed arbitrary-precision integer: sign-magnitude over 64-bit limbs,
// little-endian, normalized (no leading zero limbs, sign 0 iff value 0).
// Covers exactly what exact solution counting needs: add/sub/mul, division
// by a machine word with remainder, powers and decimal I/O. There is no
// general long division; the formulas only ever divide by a single prime
// and that division must come out exact.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    BigInt(uint64_t v);
    BigInt(int v) : BigInt(static_cast<int64_t>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<uint64_t>(v)) {}

    // Parses an optionally signed decimal string. Test fixtures use this.
    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt operator-() const;

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { lhs += rhs; return lhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { lhs -= rhs; return lhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    bool operator==(const BigInt& rhs) const {
        return sign_ == rhs.sign_ && limbs_ == rhs.limbs_;
    }
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    // In-place scaling by a word.
    void mul_u64(uint64_t m);

    // *this += addend * m without a temporary; the convolution oracle's
    // inner loop lives on this.
    void add_mul_u64(const BigInt& addend, uint64_t m);

    // Divides the magnitude by a positive word, keeping the sign; returns
    // the magnitude remainder.
    uint64_t divmod_u64(uint64_t divisor);

    // Division by a positive word that must be exact; throws internal_error
    // on a nonzero remainder.
    void div_exact_u64(uint64_t divisor);

    bool fits_u64() const { return sign_ >= 0 && limbs_.size() <= 1; }
    uint64_t to_u64() const;  // throws std::overflow_error unless fits_u64()

    std::string to_string() const;

    size_t limb_count() const { return limbs_.size(); }

private:
    void trim();
    explicit BigInt(int sign, std::vector<uint64_t> limbs);

    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint64_t> limbs_;  // little-endian magnitude
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// base^exponent as an exact integer (0^0 = 1).
BigInt pow_u64(uint64_t base, uint64_t exponent);
BigInt pow_big(BigInt base, uint64_t exponent);

// Exact nonnegative solution count.
using Count = BigInt;

}  // namespace exu
