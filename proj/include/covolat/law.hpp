// law.hpp
//
// Derives the prime-divisibility law attached to a family of links and
// evaluates every admissibility predicate on covolume denominators. A law
// holds, per prime p_j, the exponent alpha_j from the lcm of link
// automorphism orders and alpha'_j from the lcm of edge-pointwise fixator
// orders; admissibility of a rational depends only on its denominator.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "covolat/cell_complex.hpp"
#include "covolat/exact.hpp"
#include "covolat/links.hpp"

namespace covolat {

struct LawEntry {
    std::uint64_t p = 0;
    std::uint32_t alpha = 0;
    std::uint32_t alpha_prime = 0;
};

struct LawData {
    std::vector<LawEntry> entries;  // strictly increasing primes

    const LawEntry* find(std::uint64_t p) const;
    static LawData from_orders(const FactoredNat& aut_lcm, const FactoredNat& fixator_lcm);
};

struct Verdict {
    bool admissible = true;
    std::optional<std::string> violated_rule;  // "(a)", "(b)", or a corollary name
    std::optional<std::uint64_t> witness_prime;

    static Verdict ok() { return {}; }
    static Verdict violation(std::string rule, std::uint64_t prime) {
        return Verdict{false, std::move(rule), prime};
    }
};

using LinkInput = std::variant<Graph, RegisteredLink>;

/// Derives alpha from the lcm of |Aut(L_i)| and alpha' from the lcm over
/// all links and edge orbits of the edge-pointwise fixator orders; for
/// registered links the stored orders are used directly.
LawData law_from_links(std::span<const LinkInput> links);

/// Rules on the denominator b of a positive rational in lowest terms:
/// (a) every prime of b is one of the law's primes;
/// (b) when alpha'_j = 0, the p_j-adic valuation of b is at most alpha_j.
/// Rule (a) is checked before (b), smallest prime first.
Verdict admissible_vertex_covolume(const LawData& law, const Rat& x);

/// Face-covolume rules: (a) as above; when alpha'_j = 0 no power of p_j may
/// divide b at all.
Verdict admissible_face_covolume(const LawData& law, const Rat& x);

/// Writes mu = (r/mn)·(a/b) and requires every prime of b to be strictly
/// less than m. Requires m >= n >= 2, r >= 5, r even when m != n.
Verdict bipartite_corollary_check(int m, int n, int r, const Rat& mu);

/// Edge-pointwise fixator orders of a link, inside the type-preserving
/// subgroup and inside the full group (lcm over edge orbits).
struct EdgeFixatorOrders {
    FactoredNat type_preserving;
    FactoredNat full;
};
EdgeFixatorOrders edge_fixator_orders(const Graph& L);

/// Writes mu = (r/[G:B])·(a/b), with [G:B] the number of edges (chambers)
/// of L, and requires the primes of b to divide the edge-pointwise fixator
/// order inside the type-preserving subgroup. L must pass the generalized
/// polygon validation; its gonality is inferred from the diameter.
Verdict building_corollary_check(const Graph& L, int r, const Rat& mu);

/// Denominator must be an m-number: no prime divisor above m and, for
/// prime m, not divisible by m^2.
Verdict tree_m_number_check(std::uint64_t m, const Rat& mu);

}  // namespace covolat
