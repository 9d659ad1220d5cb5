// bignum.hpp
//
// Minimal arbitrary-precision unsigned integer. Group orders and covolume
// numerators/denominators must never overflow, and all arithmetic in this
// project is exact, so everything value-like bottoms out here. Only the
// operations the rest of the code needs are provided: compare, add, sub,
// mul, divmod, gcd, decimal and u64 conversions.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covolat {

class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);
    static BigUint from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // requires fits_u64()

    std::string to_string() const;

    static int compare(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    // requires *this >= rhs
    BigUint& operator-=(const BigUint& rhs);
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b);
    BigUint& operator*=(const BigUint& rhs) { return *this = *this * rhs; }

    // Long division; throws std::domain_error on division by zero. Returns
    // (quotient, remainder).
    static std::pair<BigUint, BigUint> divmod(const BigUint& num, const BigUint& den);
    friend BigUint operator/(const BigUint& a, const BigUint& b) { return divmod(a, b).first; }
    friend BigUint operator%(const BigUint& a, const BigUint& b) { return divmod(a, b).second; }

    static BigUint gcd(BigUint a, BigUint b);
    static BigUint lcm(const BigUint& a, const BigUint& b);
    static BigUint pow(const BigUint& base, std::uint32_t exp);

    std::size_t bit_length() const;
    bool bit(std::size_t i) const;

private:
    // base 2^32, little endian, no trailing zero limbs; empty == 0
    std::vector<std::uint32_t> limbs_;

    void trim();
    void shift_left_bit();  // *this <<= 1
    void set_low_bit();     // *this |= 1 (used by long division)
};

}  // namespace covolat
