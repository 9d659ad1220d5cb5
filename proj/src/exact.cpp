#include "covolat/exact.hpp"

#include <stdexcept>

namespace covolat {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1u) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set decides primality for every 64-bit integer
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FactoredNat::FactoredNat(std::map<std::uint64_t, std::uint32_t> factors)
    : factors_(std::move(factors)) {
    for (const auto& [p, e] : factors_) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FactoredNat: non-prime key");
        if (e == 0) throw std::invalid_argument("FactoredNat: zero exponent");
    }
}

std::uint32_t FactoredNat::valuation(std::uint64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

BigUint FactoredNat::value() const {
    BigUint v(1);
    for (const auto& [p, e] : factors_) v *= BigUint::pow(BigUint(p), e);
    return v;
}

bool FactoredNat::divides(const FactoredNat& other) const {
    for (const auto& [p, e] : factors_) {
        if (other.valuation(p) < e) return false;
    }
    return true;
}

FactoredNat FactoredNat::times(const FactoredNat& other) const {
    FactoredNat r = *this;
    for (const auto& [p, e] : other.factors_) r.factors_[p] += e;
    return r;
}

FactoredNat FactoredNat::lcm(const FactoredNat& a, const FactoredNat& b) {
    FactoredNat r = a;
    for (const auto& [p, e] : b.factors_) {
        auto& cur = r.factors_[p];
        if (e > cur) cur = e;
    }
    return r;
}

FactoredNat FactoredNat::divided_by(const FactoredNat& other) const {
    if (!other.divides(*this)) throw std::domain_error("FactoredNat: quotient is not integral");
    FactoredNat r = *this;
    for (const auto& [p, e] : other.factors_) {
        auto it = r.factors_.find(p);
        if (it->second == e) r.factors_.erase(it);
        else it->second -= e;
    }
    return r;
}

std::string FactoredNat::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [p, e] : factors_) {
        if (!first) out += "·";
        first = false;
        out += std::to_string(p);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

FactoredNat FactoredNat::parse(std::string_view s) {
    if (s == "1") return FactoredNat();
    std::map<std::uint64_t, std::uint32_t> factors;
    std::size_t i = 0;
    auto read_uint = [&](void) -> std::uint64_t {
        if (i >= s.size() || s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("FactoredNat: malformed factor string");
        std::uint64_t v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            ++i;
        }
        return v;
    };
    while (i < s.size()) {
        std::uint64_t p = read_uint();
        std::uint32_t e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = static_cast<std::uint32_t>(read_uint());
        }
        if (factors.count(p)) throw std::invalid_argument("FactoredNat: repeated prime");
        factors[p] = e;
        if (i < s.size()) {
            // separator: UTF-8 middle dot, '*' or '.'
            if (s.compare(i, 2, "·") == 0) i += 2;
            else if (s[i] == '*' || s[i] == '.') ++i;
            else throw std::invalid_argument("FactoredNat: bad separator");
        }
    }
    return FactoredNat(std::move(factors));
}

FactoredNat factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    std::map<std::uint64_t, std::uint32_t> factors;
    auto strip = [&](std::uint64_t p) {
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
    };
    strip(2);
    strip(3);
    strip(5);
    std::uint64_t d = 7;
    // wheel over 6k +- 1
    static const std::uint32_t steps[] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::size_t step = 0;
    while (n > 1 && d * d <= n) {
        if (is_prime_u64(n)) break;
        if (n % d == 0) strip(d);
        d += steps[step];
        step = (step + 1) % 8;
    }
    if (n > 1) ++factors[n];
    return FactoredNat(std::move(factors));
}

FactoredNat factor_big(const BigUint& n) {
    if (n.is_zero()) throw std::invalid_argument("factor_big: n must be positive");
    if (n.fits_u64()) return factor(n.to_u64());
    BigUint rest = n;
    std::map<std::uint64_t, std::uint32_t> factors;
    std::uint64_t d = 2;
    while (!rest.is_one()) {
        if (d >= (1ull << 32)) throw std::domain_error("factor_big: prime factor exceeds 2^32");
        if (rest.fits_u64()) {
            FactoredNat tail = factor(rest.to_u64());
            for (const auto& [p, e] : tail.factors()) factors[p] += e;
            break;
        }
        BigUint dd(d);
        for (;;) {
            auto [q, r] = BigUint::divmod(rest, dd);
            if (!r.is_zero()) break;
            ++factors[d];
            rest = q;
        }
        d = (d == 2) ? 3 : d + 2;
    }
    return FactoredNat(std::move(factors));
}

FactoredNat lcm_factored(std::span<const FactoredNat> orders) {
    if (orders.empty()) throw std::invalid_argument("lcm_factored: empty list");
    FactoredNat r = orders[0];
    for (std::size_t i = 1; i < orders.size(); ++i) r = FactoredNat::lcm(r, orders[i]);
    return r;
}

Rat::Rat(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    if (num_.is_zero()) {
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::plus(const Rat& other) const {
    return Rat(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Rat Rat::times(const Rat& other) const {
    return Rat(num_ * other.num_, den_ * other.den_);
}

Rat Rat::divided_by(const Rat& other) const {
    if (other.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(num_ * other.den_, den_ * other.num_);
}

int Rat::compare(const Rat& a, const Rat& b) {
    return BigUint::compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rat Rat::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(BigUint::from_decimal(s), BigUint(1));
    return Rat(BigUint::from_decimal(s.substr(0, slash)), BigUint::from_decimal(s.substr(slash + 1)));
}

Rat sum_reciprocals(std::span<const std::uint64_t> orders) {
    Rat total;
    for (std::uint64_t o : orders) {
        if (o == 0) throw std::invalid_argument("sum_reciprocals: zero order");
        total = total.plus(Rat(1, o));
    }
    return total;
}

bool is_m_number(std::uint64_t b, std::uint64_t m) {
    if (b == 0) throw std::invalid_argument("is_m_number: b must be positive");
    if (m < 2) throw std::invalid_argument("is_m_number: m must be at least 2");
    FactoredNat f = factor(b);
    for (const auto& [p, e] : f.factors()) {
        if (p > m) return false;
    }
    if (is_prime_u64(m) && f.valuation(m) >= 2) return false;
    return true;
}

}  // namespace covolat
