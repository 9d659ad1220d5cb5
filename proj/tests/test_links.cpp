#include <doctest.h>

#include <set>

#include "covolat/aut_search.hpp"
#include "covolat/links.hpp"
#include "support/test_helpers.hpp"

using namespace covolat;
namespace ts = covolat::testsupport;

TEST_SUITE("link_catalog") {

TEST_CASE("complete bipartite graphs") {
    Graph k22 = complete_bipartite(2, 2);
    CHECK(k22.vertex_count() == 4);
    CHECK(k22.edge_count() == 4);
    for (int v : k22.vertices()) CHECK(k22.degree(v) == 2);
    CHECK(is_isomorphic(k22.to_colored(), ts::cycle_graph(4).to_colored()));

    Graph k32 = complete_bipartite(3, 2);
    CHECK(k32.vertex_count() == 5);  // sides of size 3 and 2
    CHECK(k32.edge_count() == 6);

    Graph k33 = complete_bipartite(3, 3);
    CHECK(k33.vertex_count() == 6);
    CHECK(k33.edge_count() == 9);

    CHECK_THROWS(complete_bipartite(1, 2));
    CHECK_THROWS(complete_bipartite(2, 1));
}

TEST_CASE("petersen graph") {
    Graph p = petersen();
    CHECK(p.vertex_count() == 10);
    // every transposition is disjoint from exactly three others
    for (int v : p.vertices()) CHECK(p.degree(v) == 3);
    CHECK(p.edge_count() == 15);
    auto girth = graph_girth(p);
    REQUIRE(girth.has_value());
    CHECK(*girth == 5);
    // independent construction: complement of the intersecting-pairs graph
    Graph kneser = ts::kneser_5_2_complement_construction();
    CHECK(kneser.edges() == p.edges());
    CHECK(is_isomorphic(p.to_colored(), kneser.to_colored()));
}

TEST_CASE("projective plane incidence graphs") {
    Graph heawood = projective_plane_incidence(2);
    CHECK(heawood.vertex_count() == 14);
    CHECK(heawood.edge_count() == 21);

    Graph pg3 = projective_plane_incidence(3);
    CHECK(pg3.vertex_count() == 26);
    CHECK(pg3.edge_count() == 52);

    CHECK(projective_plane_supported(13));
    CHECK(projective_plane_supported(8));
    CHECK_FALSE(projective_plane_supported(6));
    CHECK_FALSE(projective_plane_supported(16));
    CHECK_THROWS(projective_plane_incidence(6));
    CHECK_THROWS(projective_plane_incidence(16));
}

TEST_CASE("projective plane axioms hold exhaustively") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        Graph g = projective_plane_incidence(q);
        auto sides = g.sides();
        // sides() orders classes by type name: "line" < "point"
        const auto& lines = sides[0];
        const auto& points = sides[1];
        CHECK(points.size() == q * q + q + 1);
        CHECK(lines.size() == q * q + q + 1);
        for (int l : lines) CHECK(g.degree(l) == static_cast<int>(q) + 1);
        // two distinct points lie on exactly one common line
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                auto ni = g.neighbors(points[i]);
                auto nj = g.neighbors(points[j]);
                std::set<int> si(ni.begin(), ni.end());
                int common = 0;
                for (int l : nj) common += si.count(l);
                REQUIRE(common == 1);
            }
        }
    }
}

TEST_CASE("extension field planes have the right shape") {
    for (std::uint64_t q : {4ull, 8ull, 9ull}) {
        Graph g = projective_plane_incidence(q);
        CHECK(g.vertex_count() == 2 * (q * q + q + 1));
        CHECK(g.edge_count() == (q + 1) * (q * q + q + 1));
        CHECK_NOTHROW(generalized_polygon_load(g, 3));
    }
}

TEST_CASE("larger prime planes have the right shape") {
    for (std::uint64_t q : {5ull, 7ull, 11ull, 13ull}) {
        Graph g = projective_plane_incidence(q);
        CHECK(g.vertex_count() == 2 * (q * q + q + 1));
        CHECK(g.edge_count() == (q + 1) * (q * q + q + 1));
        for (int v : g.vertices()) CHECK(g.degree(v) == static_cast<int>(q) + 1);
    }
    // the incidence axiom, spot-checked at q = 5
    Graph g5 = projective_plane_incidence(5);
    auto sides = g5.sides();
    const auto& points = sides[1];
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            auto ni = g5.neighbors(points[i]);
            std::set<int> si(ni.begin(), ni.end());
            int common = 0;
            for (int l : g5.neighbors(points[j])) common += si.count(l);
            REQUIRE(common == 1);
        }
    }
}

TEST_CASE("a user-supplied generalized quadrangle validates") {
    Graph doily = ts::doily_quadrangle();
    CHECK(doily.vertex_count() == 30);
    CHECK(doily.edge_count() == 45);
    CHECK(graph_diameter(doily) == 4);
    CHECK(graph_girth(doily) == 8);
    CHECK_NOTHROW(generalized_polygon_load(doily, 4));
    CHECK_THROWS(generalized_polygon_load(doily, 3));
}

TEST_CASE("generalized polygon validation") {
    Graph heawood = projective_plane_incidence(2);
    CHECK_NOTHROW(generalized_polygon_load(heawood, 3));
    CHECK_THROWS(generalized_polygon_load(heawood, 4));

    Graph k33 = complete_bipartite(3, 3);
    CHECK_NOTHROW(generalized_polygon_load(k33, 2));

    CHECK_THROWS(generalized_polygon_load(petersen(), 3));  // not bipartite

    // an untyped valid polygon gets its bipartition declared
    Graph c6 = ts::cycle_graph(6);
    Graph typed = generalized_polygon_load(c6, 3);
    CHECK(typed.typed());
}

TEST_CASE("diameter and girth") {
    CHECK(graph_diameter(projective_plane_incidence(2)) == 3);
    CHECK(graph_girth(projective_plane_incidence(2)) == 6);
    CHECK(graph_diameter(complete_bipartite(3, 3)) == 2);
    CHECK(graph_girth(complete_bipartite(3, 3)) == 4);
    CHECK_FALSE(graph_girth(ts::path_graph(5)).has_value());
    CHECK(graph_diameter(ts::path_graph(5)) == 4);
}

TEST_CASE("registered links") {
    RegisteredLink cell120 = register_link("120-cell", factor(14400), factor(1));
    CHECK(cell120.aut_order == factor(14400));
    RegisteredLink a2 = register_link("A2-q2", factor(168), factor(8), 21);
    CHECK(a2.edge_count == 21);
    CHECK_THROWS(register_link("X", factor(6), factor(4)));

    LinkRegistry registry;
    registry.put(cell120);
    registry.put(a2);
    CHECK(registry.get("120-cell").has_value());
    CHECK_FALSE(registry.get("missing").has_value());
    CHECK(registry.names().size() == 2);
    // overwrite by name
    registry.put(register_link("A2-q2", factor(168), factor(8), 21));
    CHECK(registry.names().size() == 2);
}

TEST_CASE("complete bipartite links are edge-transitive") {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 2; n <= m; ++n) {
            Graph g = complete_bipartite(m, n);
            PermGroup aut = graph_automorphisms(g);
            CHECK(is_edge_transitive(g, aut));
        }
    }
}

TEST_CASE("plane incidence graphs are side- and edge-transitive") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        Graph g = projective_plane_incidence(q);
        PermGroup aut0 = type_preserving_subgroup(g);
        CHECK(is_edge_transitive(g, aut0));
        auto orbits = aut0.orbits();
        REQUIRE(orbits.size() == 2);
        CHECK(orbits[0].size() == q * q + q + 1);
        CHECK(orbits[1].size() == q * q + q + 1);
    }
}

}  // TEST_SUITE
