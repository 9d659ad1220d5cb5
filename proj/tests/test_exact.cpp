#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "covolat/exact.hpp"
#include "support/test_helpers.hpp"

using namespace covolat;
using covolat::testsupport::frac_sum_oracle;
using covolat::testsupport::Lcg;

namespace {

FactoredNat fn(std::map<std::uint64_t, std::uint32_t> factors) { return FactoredNat(std::move(factors)); }

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("factor on the pinned examples") {
    CHECK(factor(1) == fn({}));
    CHECK(factor(168) == fn({{2, 3}, {3, 1}, {7, 1}}));
    CHECK(factor(14400) == fn({{2, 6}, {3, 2}, {5, 2}}));
    CHECK_THROWS(factor(0));
}

TEST_CASE("factor round trip up to one million") {
    for (std::uint64_t n = 1; n <= 1000000; ++n) {
        FactoredNat f = factor(n);
        REQUIRE(f.value().to_u64() == n);
    }
}

TEST_CASE("factor is a multiplicative homomorphism") {
    Lcg rng(21);
    for (int i = 0; i < 5000; ++i) {
        std::uint64_t a = 1 + rng.next_below(10000);
        std::uint64_t b = 1 + rng.next_below(10000);
        CHECK(factor(a * b) == factor(a).times(factor(b)));
    }
}

TEST_CASE("primality test against a sieve") {
    std::vector<char> composite(20000, 0);
    for (std::uint64_t p = 2; p < composite.size(); ++p) {
        for (std::uint64_t k = 2 * p; k < composite.size(); k += p) composite[k] = 1;
    }
    for (std::uint64_t n = 0; n < composite.size(); ++n)
        CHECK(is_prime_u64(n) == (n >= 2 && !composite[n]));
    CHECK(is_prime_u64(2147483647ull));         // 2^31 - 1
    CHECK_FALSE(is_prime_u64(2147483647ull * 2147483647ull));
}

TEST_CASE("lcm of factored orders") {
    std::vector<FactoredNat> single = {fn({{2, 3}, {3, 1}, {5, 1}})};
    CHECK(lcm_factored(single) == single[0]);
    std::vector<FactoredNat> two = {fn({{2, 2}, {3, 1}}), fn({{2, 1}, {7, 1}})};
    CHECK(lcm_factored(two) == fn({{2, 2}, {3, 1}, {7, 1}}));
    std::vector<FactoredNat> with_one = {fn({}), fn({{5, 2}})};
    CHECK(lcm_factored(with_one) == fn({{5, 2}}));
    std::vector<FactoredNat> empty;
    CHECK_THROWS(lcm_factored(empty));
}

TEST_CASE("factored divisibility and quotients") {
    FactoredNat a = factor(24), b = factor(168);
    CHECK(a.divides(b));
    CHECK_FALSE(b.divides(a));
    CHECK(b.divided_by(a) == factor(7));
    CHECK_THROWS(a.divided_by(b));
    CHECK(factor(120960).value().to_u64() == 120960);
}

TEST_CASE("factored string form") {
    CHECK(factor(1).to_string() == "1");
    CHECK(factor(168).to_string() == "2^3·3·7");
    CHECK(FactoredNat::parse("2^3·3·7") == factor(168));
    CHECK(FactoredNat::parse("1") == factor(1));
    CHECK(FactoredNat::parse("2^6*3^2*5^2") == factor(14400));
    CHECK_THROWS(FactoredNat::parse("4^2"));
    CHECK_THROWS(FactoredNat::parse("2^0"));
}

TEST_CASE("sum of reciprocals on the pinned examples") {
    std::vector<std::uint64_t> one = {1};
    CHECK(sum_reciprocals(one).to_string() == "1");
    // quotient data of the right-angled polygon lattice at m=n=2, r=5:
    // five vertex orbits of stabiliser order 4
    std::vector<std::uint64_t> vertices = {4, 4, 4, 4, 4};
    auto [num, den] = frac_sum_oracle(vertices);
    CHECK(num == 5);
    CHECK(den == 4);
    CHECK(sum_reciprocals(vertices).to_string() == "5/4");
    std::vector<std::uint64_t> three = {8, 8, 8};
    CHECK(sum_reciprocals(three).to_string() == "3/8");
    std::vector<std::uint64_t> bad = {4, 0};
    CHECK_THROWS(sum_reciprocals(bad));
}

TEST_CASE("sum of reciprocals properties") {
    Lcg rng(31);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::uint64_t> orders;
        int len = 1 + static_cast<int>(rng.next_below(8));
        for (int i = 0; i < len; ++i) orders.push_back(1 + rng.next_below(40));
        Rat direct = sum_reciprocals(orders);
        // independent oracle
        auto [num, den] = frac_sum_oracle(orders);
        CHECK(direct == Rat(num, den));
        // permutation invariance
        std::vector<std::uint64_t> shuffled = orders;
        auto perm = rng.permutation(len);
        for (int i = 0; i < len; ++i) shuffled[i] = orders[perm[i]];
        CHECK(sum_reciprocals(shuffled) == direct);
        // monotone in list extension
        std::vector<std::uint64_t> extended = orders;
        extended.push_back(1 + rng.next_below(40));
        CHECK(direct <= sum_reciprocals(extended));
    }
}

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rat(6, 8).to_string() == "3/4");
    CHECK(Rat(8, 4).to_string() == "2");
    CHECK(Rat(0, 7).to_string() == "0");
    CHECK_THROWS(Rat(1, 0));
    Rat x = Rat::parse("15/4");
    CHECK(x.numerator().to_u64() == 15);
    CHECK(x.denominator().to_u64() == 4);
    CHECK(Rat::parse("7") == Rat(7, 1));
    CHECK(x.times(Rat(4, 5)) == Rat(3, 1));
    CHECK(x.divided_by(Rat(5, 4)) == Rat(3, 1));
    CHECK(Rat(1, 6).plus(Rat(1, 3)) == Rat(1, 2));
    Lcg rng(41);
    for (int i = 0; i < 500; ++i) {
        Rat r(1 + rng.next_below(1000), 1 + rng.next_below(1000));
        CHECK(BigUint::gcd(r.numerator(), r.denominator()).is_one());
    }
}

TEST_CASE("m-numbers") {
    CHECK(is_m_number(6, 3));
    CHECK_FALSE(is_m_number(9, 3));
    CHECK_FALSE(is_m_number(5, 4));
    CHECK(is_m_number(16, 4));   // 4 is not prime, powers of 2 allowed
    CHECK(is_m_number(1, 2));
    CHECK_FALSE(is_m_number(4, 2));
    CHECK(is_m_number(2, 2));
    CHECK_THROWS(is_m_number(0, 3));
}

}  // TEST_SUITE
