#include "covolat/covolume.hpp"

#include <stdexcept>

#include "covolat/aut_search.hpp"
#include "covolat/links.hpp"

namespace covolat {

void QuotientData::check() const {
    if (cells.empty()) throw std::invalid_argument("quotient: needs at least one cell");
    for (const auto& c : cells) {
        if (c.order == 0) throw std::invalid_argument("quotient: zero stabiliser order");
        if (c.dim < 0 || c.dim > 2) throw std::invalid_argument("quotient: cell dimension out of range");
    }
}

Rat s_covolume(const QuotientData& q, int dim) {
    q.check();
    std::vector<std::uint64_t> orders;
    for (const auto& c : q.cells) {
        if (c.dim == dim) orders.push_back(c.order);
    }
    if (orders.empty())
        throw std::invalid_argument("s_covolume: no cells of dimension " + std::to_string(dim));
    return sum_reciprocals(orders);
}

QuotientData bourdon_lattice(int m, int n, int r) {
    if (m < 2 || n < 2) throw std::invalid_argument("bourdon_lattice: need m, n >= 2");
    if (r < 5) throw std::invalid_argument("bourdon_lattice: need r >= 5");
    if (m != n && r % 2 != 0)
        throw std::invalid_argument("bourdon_lattice: r must be even when m != n");
    QuotientData q;
    q.cells.push_back({"f1", 2, 1});
    for (int i = 1; i <= r; ++i) {
        std::uint64_t order = (m == n || i % 2 == 1) ? static_cast<std::uint64_t>(m)
                                                     : static_cast<std::uint64_t>(n);
        q.cells.push_back({"e" + std::to_string(i), 1, order});
    }
    for (int i = 1; i <= r; ++i)
        q.cells.push_back({"v" + std::to_string(i), 0,
                           static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n)});
    return q;
}

QuotientData building_lattice(const Graph& L, int r, std::optional<BuildingOrders> orders) {
    if (r < 5) throw std::invalid_argument("building_lattice: need r >= 5");
    if (r % 2 != 0) throw std::invalid_argument("building_lattice: r must be even");
    int m = graph_diameter(L);
    Graph validated = generalized_polygon_load(L, m);
    BuildingOrders o;
    if (orders) {
        o = *orders;
        if (o.B == 0 || o.P1 == 0 || o.P2 == 0 || o.G == 0)
            throw std::invalid_argument("building_lattice: orders must be positive");
        if (o.P1 % o.B != 0 || o.P2 % o.B != 0)
            throw std::invalid_argument("building_lattice: B must divide P1 and P2");
        if (o.G % o.P1 != 0 || o.G % o.P2 != 0)
            throw std::invalid_argument("building_lattice: P1 and P2 must divide G");
    } else {
        PermGroup aut0 = type_preserving_subgroup(validated);
        if (!is_edge_transitive(validated, aut0))
            throw std::invalid_argument(
                "building_lattice: orders cannot be derived, the type-preserving group is not "
                "edge-transitive");
        auto sides = validated.sides();
        // each side must be a single orbit
        auto orbit_list = aut0.orbits();
        if (orbit_list.size() != 2)
            throw std::invalid_argument(
                "building_lattice: orders cannot be derived, the sides are not single orbits");
        BigUint g_order = aut0.order_value();
        std::uint64_t g = g_order.to_u64();
        std::uint64_t chambers = validated.edge_count();
        if (g % chambers != 0)
            throw std::logic_error("building_lattice: group order not divisible by chamber count");
        o.G = g;
        o.B = g / chambers;
        if (g % sides[0].size() != 0 || g % sides[1].size() != 0)
            throw std::logic_error("building_lattice: group order not divisible by side size");
        o.P1 = g / sides[0].size();
        o.P2 = g / sides[1].size();
    }
    QuotientData q;
    q.cells.push_back({"f1", 2, o.B});
    for (int i = 1; i <= r; ++i)
        q.cells.push_back({"e" + std::to_string(i), 1, (i % 2 == 1) ? o.P1 : o.P2});
    for (int i = 1; i <= r; ++i) q.cells.push_back({"v" + std::to_string(i), 0, o.G});
    return q;
}

Rat c_of_X(const QuotientData& q) {
    Rat vertex = s_covolume(q, 0);
    Rat face = s_covolume(q, 2);
    return vertex.divided_by(face);
}

QuotientData cover_quotient(const QuotientData& q, int k) {
    if (k < 1) throw std::invalid_argument("cover_quotient: k must be >= 1");
    q.check();
    QuotientData out;
    for (const auto& c : q.cells) {
        for (int i = 1; i <= k; ++i)
            out.cells.push_back({c.label + "_" + std::to_string(i), c.dim, c.order});
    }
    return out;
}

}  // namespace covolat
