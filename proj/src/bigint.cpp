#include "exu/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "exu/errors.hpp"

namespace exu {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

int cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// a += b
void add_mag(std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    u64 carry = 0;
    size_t i = 0;
    for (; i < b.size(); ++i) {
        u128 cur = (u128)a[i] + b[i] + carry;
        a[i] = (u64)cur;
        carry = (u64)(cur >> 64);
    }
    for (; carry && i < a.size(); ++i) {
        u128 cur = (u128)a[i] + carry;
        a[i] = (u64)cur;
        carry = (u64)(cur >> 64);
    }
    if (carry) a.push_back(carry);
}

// a -= b, requires |a| >= |b|
void sub_mag(std::vector<u64>& a, const std::vector<u64>& b) {
    u64 borrow = 0;
    size_t i = 0;
    for (; i < b.size(); ++i) {
        u128 cur = (u128)a[i] - b[i] - borrow;
        a[i] = (u64)cur;
        borrow = (cur >> 64) ? 1 : 0;
    }
    for (; borrow && i < a.size(); ++i) {
        u128 cur = (u128)a[i] - borrow;
        a[i] = (u64)cur;
        borrow = (cur >> 64) ? 1 : 0;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

constexpr u64 kDecChunk = 10'000'000'000'000'000'000ULL;  // 10^19
constexpr int kDecChunkDigits = 19;

}  // namespace

BigInt::BigInt(int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    u64 mag = v < 0 ? (u64)(-(v + 1)) + 1 : (u64)v;  // safe for INT64_MIN
    limbs_.push_back(mag);
}

BigInt::BigInt(uint64_t v) {
    if (v == 0) return;
    sign_ = 1;
    limbs_.push_back(v);
}

BigInt::BigInt(int sign, std::vector<uint64_t> limbs) : sign_(sign), limbs_(std::move(limbs)) {
    trim();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_decimal(std::string_view text) {
    if (text.empty()) throw precondition_error("from_decimal: empty string");
    bool neg = false;
    size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw precondition_error("from_decimal: no digits");
    BigInt out;
    while (pos < text.size()) {
        size_t len = std::min<size_t>(kDecChunkDigits, text.size() - pos);
        u64 chunk = 0;
        u64 scale = 1;
        for (size_t i = 0; i < len; ++i) {
            char c = text[pos + i];
            if (c < '0' || c > '9') throw precondition_error("from_decimal: invalid digit");
            chunk = chunk * 10 + (u64)(c - '0');
            scale *= 10;
        }
        out.mul_u64(scale);
        out += BigInt(chunk);
        pos += len;
    }
    if (neg && !out.is_zero()) out.sign_ = -1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (this == &rhs) {
        mul_u64(2);
        return *this;
    }
    if (sign_ == rhs.sign_) {
        add_mag(limbs_, rhs.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (c == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (c > 0) {
        sub_mag(limbs_, rhs.limbs_);
    } else {
        std::vector<u64> tmp = rhs.limbs_;
        sub_mag(tmp, limbs_);
        limbs_ = std::move(tmp);
        sign_ = rhs.sign_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    if (this == &rhs) {
        sign_ = 0;
        limbs_.clear();
        return *this;
    }
    BigInt neg = rhs;
    neg.sign_ = -neg.sign_;
    return *this += neg;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.sign_ == 0 || rhs.sign_ == 0) return BigInt();
    std::vector<uint64_t> out(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < lhs.limbs_.size(); ++i) {
        u64 ai = lhs.limbs_[i];
        if (ai == 0) continue;
        u64 carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            u128 cur = (u128)ai * rhs.limbs_[j] + out[i + j] + carry;
            out[i + j] = (u64)cur;
            carry = (u64)(cur >> 64);
        }
        out[i + rhs.limbs_.size()] = carry;
    }
    return BigInt(lhs.sign_ * rhs.sign_, std::move(out));
}

BigInt& BigInt::operator*=(const BigInt& rhs) { return *this = *this * rhs; }

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

void BigInt::mul_u64(uint64_t m) {
    if (sign_ == 0) return;
    if (m == 0) {
        sign_ = 0;
        limbs_.clear();
        return;
    }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 cur = (u128)limb * m + carry;
        limb = (u64)cur;
        carry = (u64)(cur >> 64);
    }
    if (carry) limbs_.push_back(carry);
}

void BigInt::add_mul_u64(const BigInt& addend, uint64_t m) {
    if (m == 0 || addend.sign_ == 0) return;
    if (sign_ == 0 || sign_ == addend.sign_) {
        if (limbs_.size() < addend.limbs_.size()) limbs_.resize(addend.limbs_.size(), 0);
        u64 carry = 0;
        size_t i = 0;
        for (; i < addend.limbs_.size(); ++i) {
            u128 cur = (u128)addend.limbs_[i] * m + limbs_[i] + carry;
            limbs_[i] = (u64)cur;
            carry = (u64)(cur >> 64);
        }
        for (; carry && i < limbs_.size(); ++i) {
            u128 cur = (u128)limbs_[i] + carry;
            limbs_[i] = (u64)cur;
            carry = (u64)(cur >> 64);
        }
        if (carry) limbs_.push_back(carry);
        if (sign_ == 0) sign_ = addend.sign_;
        return;
    }
    BigInt tmp = addend;
    tmp.mul_u64(m);
    *this += tmp;
}

uint64_t BigInt::divmod_u64(uint64_t divisor) {
    if (divisor == 0) throw precondition_error("divmod_u64: division by zero");
    if (sign_ == 0) return 0;
    u64 rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = ((u128)rem << 64) | limbs_[i];
        limbs_[i] = (u64)(cur / divisor);
        rem = (u64)(cur % divisor);
    }
    trim();
    return rem;
}

void BigInt::div_exact_u64(uint64_t divisor) {
    if (divmod_u64(divisor) != 0) {
        throw internal_error("div_exact_u64: division left a remainder");
    }
}

uint64_t BigInt::to_u64() const {
    if (sign_ < 0 || limbs_.size() > 1) throw std::overflow_error("BigInt does not fit uint64");
    return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt mag = *this;
    mag.sign_ = 1;
    std::string digits;
    while (!mag.is_zero()) {
        u64 chunk = mag.divmod_u64(kDecChunk);
        if (mag.is_zero()) {
            // leading chunk, no zero padding
            std::string head = std::to_string(chunk);
            std::reverse(head.begin(), head.end());
            digits += head;
        } else {
            for (int i = 0; i < kDecChunkDigits; ++i) {
                digits += char('0' + chunk % 10);
                chunk /= 10;
            }
        }
    }
    if (sign_ < 0) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt pow_u64(uint64_t base, uint64_t exponent) { return pow_big(BigInt(base), exponent); }

BigInt pow_big(BigInt base, uint64_t exponent) {
    BigInt out(uint64_t{1});
    while (exponent) {
        if (exponent & 1) out *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return out;
}

}  // namespace exu
