#include "covolat/law.hpp"

#include <stdexcept>

#include "covolat/aut_search.hpp"

namespace covolat {

const LawEntry* LawData::find(std::uint64_t p) const {
    for (const auto& e : entries) {
        if (e.p == p) return &e;
    }
    return nullptr;
}

LawData LawData::from_orders(const FactoredNat& aut_lcm, const FactoredNat& fixator_lcm) {
    if (!fixator_lcm.divides(aut_lcm))
        throw std::logic_error("law: fixator lcm does not divide automorphism lcm");
    LawData law;
    for (const auto& [p, e] : aut_lcm.factors())
        law.entries.push_back({p, e, fixator_lcm.valuation(p)});
    return law;
}

LawData law_from_links(std::span<const LinkInput> links) {
    if (links.empty()) throw std::invalid_argument("law_from_links: empty link list");
    FactoredNat aut_lcm, fixator_lcm;
    bool have_fixator = false;
    for (const auto& input : links) {
        if (std::holds_alternative<RegisteredLink>(input)) {
            const auto& reg = std::get<RegisteredLink>(input);
            aut_lcm = FactoredNat::lcm(aut_lcm, reg.aut_order);
            fixator_lcm = FactoredNat::lcm(fixator_lcm, reg.fixator_order);
            have_fixator = true;
            continue;
        }
        const Graph& g = std::get<Graph>(input);
        PermGroup aut = graph_automorphisms(g);
        aut_lcm = FactoredNat::lcm(aut_lcm, aut.order());
        for (const auto& [a, b] : edge_orbit_reps(g, aut)) {
            std::vector<int> endpoints = {a, b};
            PermGroup fix = graph_pointwise_fixator(g, endpoints);
            fixator_lcm = FactoredNat::lcm(fixator_lcm, fix.order());
            have_fixator = true;
        }
    }
    // a link with no edges contributes nothing to alpha'
    (void)have_fixator;
    return LawData::from_orders(aut_lcm, fixator_lcm);
}

namespace {

FactoredNat positive_denominator(const Rat& x, const char* where) {
    if (x.is_zero()) throw std::invalid_argument(std::string(where) + ": covolume must be positive");
    return factor_big(x.denominator());
}

}  // namespace

Verdict admissible_vertex_covolume(const LawData& law, const Rat& x) {
    FactoredNat b = positive_denominator(x, "admissible_vertex_covolume");
    for (const auto& [p, e] : b.factors()) {
        if (!law.find(p)) return Verdict::violation("(a)", p);
    }
    for (const auto& entry : law.entries) {
        if (entry.alpha_prime == 0 && b.valuation(entry.p) > entry.alpha)
            return Verdict::violation("(b)", entry.p);
    }
    return Verdict::ok();
}

Verdict admissible_face_covolume(const LawData& law, const Rat& x) {
    FactoredNat b = positive_denominator(x, "admissible_face_covolume");
    for (const auto& [p, e] : b.factors()) {
        if (!law.find(p)) return Verdict::violation("(a)", p);
    }
    for (const auto& entry : law.entries) {
        if (entry.alpha_prime == 0 && b.valuation(entry.p) > 0)
            return Verdict::violation("(b)", entry.p);
    }
    return Verdict::ok();
}

Verdict bipartite_corollary_check(int m, int n, int r, const Rat& mu) {
    if (n < 2 || m < n) throw std::invalid_argument("bipartite_corollary_check: need m >= n >= 2");
    if (r < 5) throw std::invalid_argument("bipartite_corollary_check: need r >= 5");
    if (m != n && r % 2 != 0)
        throw std::invalid_argument("bipartite_corollary_check: r must be even when m != n");
    Rat ab = mu.times(Rat(static_cast<std::uint64_t>(m) * n, static_cast<std::uint64_t>(r)));
    FactoredNat b = positive_denominator(ab, "bipartite_corollary_check");
    for (const auto& [p, e] : b.factors()) {
        if (p >= static_cast<std::uint64_t>(m)) return Verdict::violation("bipartite", p);
    }
    return Verdict::ok();
}

EdgeFixatorOrders edge_fixator_orders(const Graph& L) {
    EdgeFixatorOrders out;
    PermGroup aut0 = type_preserving_subgroup(L);
    for (const auto& [a, b] : edge_orbit_reps(L, aut0)) {
        std::vector<int> endpoints = {a, b};
        out.type_preserving =
            FactoredNat::lcm(out.type_preserving, graph_pointwise_fixator(L, endpoints, true).order());
    }
    PermGroup aut = graph_automorphisms(L);
    for (const auto& [a, b] : edge_orbit_reps(L, aut)) {
        std::vector<int> endpoints = {a, b};
        out.full = FactoredNat::lcm(out.full, graph_pointwise_fixator(L, endpoints, false).order());
    }
    return out;
}

Verdict building_corollary_check(const Graph& L, int r, const Rat& mu) {
    if (r < 5) throw std::invalid_argument("building_corollary_check: need r >= 5");
    int m = graph_diameter(L);
    Graph validated = generalized_polygon_load(L, m);
    std::uint64_t chambers = validated.edge_count();
    if (chambers == 0) throw std::invalid_argument("building_corollary_check: link has no edges");
    Rat ab = mu.times(Rat(chambers, static_cast<std::uint64_t>(r)));
    FactoredNat b = positive_denominator(ab, "building_corollary_check");
    FactoredNat allowed = edge_fixator_orders(validated).type_preserving;
    for (const auto& [p, e] : b.factors()) {
        if (allowed.valuation(p) == 0) return Verdict::violation("building", p);
    }
    return Verdict::ok();
}

Verdict tree_m_number_check(std::uint64_t m, const Rat& mu) {
    FactoredNat b = positive_denominator(mu, "tree_m_number_check");
    for (const auto& [p, e] : b.factors()) {
        if (p > m) return Verdict::violation("(a)", p);
    }
    if (is_prime_u64(m) && b.valuation(m) >= 2) return Verdict::violation("(b)", m);
    return Verdict::ok();
}

}  // namespace covolat
