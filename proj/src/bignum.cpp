#include "covolat/bignum.hpp"

#include <algorithm>
#include <stdexcept>

namespace covolat {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

BigUint BigUint::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigUint: empty decimal string");
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigUint: bad decimal digit");
        // r = r*10 + digit
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : r.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry) {
            r.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    return r;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint: value exceeds 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    // repeated division by 10^9
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    std::uint64_t carry = 0;
    std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0u);
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
    if (*this < rhs) throw std::domain_error("BigUint: subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                           (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
        if (cur < 0) {
            cur += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::size_t BigUint::bit_length() const {
    if (is_zero()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigUint::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigUint::shift_left_bit() {
    std::uint32_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigUint::set_low_bit() {
    if (limbs_.empty()) limbs_.push_back(1);
    else limbs_[0] |= 1u;
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw std::domain_error("BigUint: division by zero");
    if (num < den) return {BigUint(), num};
    // shift-subtract long division, MSB first
    BigUint quot, rem;
    for (std::size_t i = num.bit_length(); i-- > 0;) {
        rem.shift_left_bit();
        if (num.bit(i)) rem.set_low_bit();
        quot.shift_left_bit();
        if (rem >= den) {
            rem -= den;
            quot.set_low_bit();
        }
    }
    quot.trim();
    rem.trim();
    return {std::move(quot), std::move(rem)};
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    while (!b.is_zero()) {
        BigUint r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigUint BigUint::lcm(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint();
    return (a / gcd(a, b)) * b;
}

BigUint BigUint::pow(const BigUint& base, std::uint32_t exp) {
    BigUint r(1);
    BigUint b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace covolat
