// exact.hpp
//
// Exact arithmetic on factored natural numbers and nonnegative rationals.
// A FactoredNat is a positive integer held as its prime factorization and
// is the currency of all group orders; a Rat is a rational in lowest terms
// and is the currency of all covolumes. Divisibility questions are answered
// on the factored form, never through floating point.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covolat/bignum.hpp"

namespace covolat {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

class FactoredNat {
public:
    FactoredNat() = default;  // the integer 1

    /// Builds from an explicit prime->exponent map; validates primality
    /// and positive exponents.
    explicit FactoredNat(std::map<std::uint64_t, std::uint32_t> factors);

    const std::map<std::uint64_t, std::uint32_t>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    /// Exponent of p in the represented integer (0 if absent).
    std::uint32_t valuation(std::uint64_t p) const;

    /// The represented integer.
    BigUint value() const;

    /// True iff *this divides other (exponent-wise comparison).
    bool divides(const FactoredNat& other) const;

    FactoredNat times(const FactoredNat& other) const;

    /// Exponent-wise max.
    static FactoredNat lcm(const FactoredNat& a, const FactoredNat& b);

    /// Exact quotient; throws if other does not divide *this.
    FactoredNat divided_by(const FactoredNat& other) const;

    /// Sorted "p^e·p^e" rendering; "1" when empty; exponent 1 prints as "p".
    std::string to_string() const;
    static FactoredNat parse(std::string_view s);

    friend bool operator==(const FactoredNat& a, const FactoredNat& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const FactoredNat& a, const FactoredNat& b) { return !(a == b); }

private:
    std::map<std::uint64_t, std::uint32_t> factors_;
};

/// Prime factorization by trial division (inputs are group orders, far below
/// the 64-bit limit); rejects n = 0.
FactoredNat factor(std::uint64_t n);

/// Factors a BigUint that is known to be a product of primes < 2^32
/// (everything this project produces is). Throws otherwise.
FactoredNat factor_big(const BigUint& n);

/// Exponent-wise max over a non-empty list.
FactoredNat lcm_factored(std::span<const FactoredNat> orders);

class Rat {
public:
    Rat() : num_(0), den_(1) {}  // zero
    Rat(std::uint64_t num, std::uint64_t den) : Rat(BigUint(num), BigUint(den)) {}
    Rat(BigUint num, BigUint den);  // normalizes; rejects den = 0

    static Rat from_integer(BigUint n) { return Rat(std::move(n), BigUint(1)); }

    const BigUint& numerator() const { return num_; }
    const BigUint& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    Rat plus(const Rat& other) const;
    Rat times(const Rat& other) const;
    /// Division; throws on division by zero.
    Rat divided_by(const Rat& other) const;

    static int compare(const Rat& a, const Rat& b);
    friend bool operator==(const Rat& a, const Rat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return compare(a, b) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return compare(a, b) <= 0; }

    /// "a/b", or "a" when b = 1.
    std::string to_string() const;
    static Rat parse(std::string_view s);

private:
    BigUint num_;
    BigUint den_;
};

/// Sum of reciprocals of stabiliser orders, in lowest terms. All entries
/// must be >= 1.
Rat sum_reciprocals(std::span<const std::uint64_t> orders);

/// True iff no prime divisor of b exceeds m and, when m is prime, m^2 does
/// not divide b. Requires b >= 1 and m >= 2.
bool is_m_number(std::uint64_t b, std::uint64_t m);

}  // namespace covolat
