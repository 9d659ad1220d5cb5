#include <doctest.h>

#include <numeric>

#include "covolat/bignum.hpp"
#include "support/test_helpers.hpp"

using covolat::BigUint;
using covolat::testsupport::Lcg;

TEST_SUITE("exact") {

TEST_CASE("biguint decimal round trip") {
    for (std::uint64_t v : {0ull, 1ull, 9ull, 10ull, 4294967295ull, 4294967296ull,
                            18446744073709551615ull}) {
        BigUint b(v);
        CHECK(b.to_string() == std::to_string(v));
        CHECK(BigUint::from_decimal(b.to_string()) == b);
        if (v > 0) CHECK(b.to_u64() == v);
    }
    BigUint big = BigUint::from_decimal("123456789012345678901234567890");
    CHECK(big.to_string() == "123456789012345678901234567890");
    CHECK_FALSE(big.fits_u64());
    CHECK_THROWS(BigUint::from_decimal("12a"));
    CHECK_THROWS(BigUint::from_decimal(""));
}

TEST_CASE("biguint arithmetic agrees with 64-bit arithmetic on small values") {
    Lcg rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = rng.next_below(1u << 30);
        std::uint64_t b = rng.next_below(1u << 30);
        CHECK((BigUint(a) + BigUint(b)).to_u64() == a + b);
        CHECK((BigUint(a) * BigUint(b)).to_u64() == a * b);
        if (a >= b) CHECK((BigUint(a) - BigUint(b)).to_u64() == a - b);
        if (b != 0) {
            auto [q, r] = BigUint::divmod(BigUint(a), BigUint(b));
            CHECK(q.to_u64() == a / b);
            CHECK(r.to_u64() == a % b);
        }
        CHECK(BigUint::gcd(BigUint(a), BigUint(b)).to_u64() == std::gcd(a, b));
    }
}

TEST_CASE("biguint divmod identity on large values") {
    // mul and add are the simpler primitives; divmod must invert them
    Lcg rng(12);
    for (int i = 0; i < 300; ++i) {
        BigUint a(rng.next());
        BigUint b(rng.next());
        for (int k = 0; k < static_cast<int>(rng.next_below(3)); ++k) a = a * BigUint(rng.next());
        for (int k = 0; k < static_cast<int>(rng.next_below(2)); ++k) b = b * BigUint(rng.next());
        if (b.is_zero()) continue;
        auto [q, r] = BigUint::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r < b);
    }
    CHECK_THROWS(BigUint::divmod(BigUint(4), BigUint(0)));
}

TEST_CASE("biguint pow and comparisons") {
    CHECK(BigUint::pow(BigUint(2), 10).to_u64() == 1024);
    CHECK(BigUint::pow(BigUint(10), 0).to_u64() == 1);
    BigUint p = BigUint::pow(BigUint(2), 100);
    CHECK(p.to_string() == "1267650600228229401496703205376");
    CHECK(BigUint(5) < BigUint(7));
    CHECK(BigUint(7) >= BigUint(7));
    CHECK(BigUint::lcm(BigUint(4), BigUint(6)).to_u64() == 12);
}

}  // TEST_SUITE
