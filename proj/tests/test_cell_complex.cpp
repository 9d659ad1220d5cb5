#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "covolat/aut_search.hpp"
#include "covolat/cell_complex.hpp"
#include "covolat/json_io.hpp"
#include "support/test_helpers.hpp"

using namespace covolat;
namespace ts = covolat::testsupport;

TEST_SUITE("complex_core") {

TEST_CASE("validation of well-formed complexes") {
    CellComplex vertex;
    Cell v;
    v.id = 0;
    v.dim = 0;
    vertex.add_cell(v);
    CHECK(validate(vertex).valid);

    CHECK(validate(ts::single_pentagon()).valid);
    CHECK(validate(ts::pentagon_patch()).valid);
}

TEST_CASE("validation failures carry the first violation") {
    // 2-cell whose boundary is two disjoint triangles
    CellComplex c;
    for (int v = 0; v < 6; ++v) {
        Cell cell;
        cell.id = v;
        cell.dim = 0;
        c.add_cell(cell);
    }
    auto edge = [&](int id, int a, int b) {
        Cell cell;
        cell.id = id;
        cell.dim = 1;
        cell.faces = {a, b};
        c.add_cell(cell);
    };
    edge(6, 0, 1);
    edge(7, 1, 2);
    edge(8, 2, 0);
    edge(9, 3, 4);
    edge(10, 4, 5);
    edge(11, 5, 3);
    Cell face;
    face.id = 12;
    face.dim = 2;
    face.faces = {6, 7, 8, 9, 10, 11};
    c.add_cell(face);
    ValidationResult res = validate(c);
    CHECK_FALSE(res.valid);
    CHECK(res.problem.find("12") != std::string::npos);

    CellComplex dangling;
    Cell w;
    w.id = 0;
    w.dim = 0;
    dangling.add_cell(w);
    Cell e;
    e.id = 1;
    e.dim = 1;
    e.faces = {0, 99};
    dangling.add_cell(e);
    CHECK_FALSE(validate(dangling).valid);

    CellComplex loop_edge;
    loop_edge.add_cell(w);
    Cell le;
    le.id = 1;
    le.dim = 1;
    le.faces = {0, 0};
    loop_edge.add_cell(le);
    CHECK_FALSE(validate(loop_edge).valid);
}

TEST_CASE("link of the patch center is a 4-cycle") {
    CellComplex patch = ts::pentagon_patch();
    Graph lk = link(patch, 0);
    CHECK(lk.vertex_count() == 4);
    CHECK(lk.edge_count() == 4);
    for (int v : lk.vertices()) CHECK(lk.degree(v) == 2);
    CHECK(is_isomorphic(lk.to_colored(), ts::cycle_graph(4).to_colored()));
}

TEST_CASE("link of a pentagon corner is a single edge") {
    CellComplex pent = ts::single_pentagon();
    Graph lk = link(pent, 0);
    CHECK(lk.vertex_count() == 2);
    CHECK(lk.edge_count() == 1);
}

TEST_CASE("link of an isolated vertex is empty") {
    CellComplex c;
    Cell v;
    v.id = 7;
    v.dim = 0;
    c.add_cell(v);
    Graph lk = link(c, 7);
    CHECK(lk.vertex_count() == 0);
    CHECK(lk.edge_count() == 0);
    CHECK_THROWS(link(c, 8));
}

TEST_CASE("links of every patch vertex are loop-free graphs") {
    CellComplex patch = ts::pentagon_patch();
    for (int v : patch.cells_of_dim(0)) CHECK_NOTHROW(link(patch, v));
}

TEST_CASE("balls around a cell") {
    CellComplex patch = ts::pentagon_patch();
    CellComplex b0 = ball(patch, 0, 0);
    CHECK(b0.cell_count() == 1);
    CHECK(b0.has_cell(0));

    // radius 0 around a face keeps its closure
    CellComplex pent_ball = ball(ts::single_pentagon(), 10, 0);
    CHECK(pent_ball.cell_count() == 11);

    CellComplex b1 = ball(patch, 0, 1);
    CHECK(b1.cell_count(2) == 4);
    CHECK(b1.cell_count(0) == 13);
    CHECK(b1.cell_count(1) == 16);

    CellComplex saturated = ball(patch, 0, 5);
    CHECK(saturated.cell_count() == patch.cell_count());
    CHECK_THROWS(ball(patch, 999, 1));
}

TEST_CASE("balls are nested") {
    CellComplex patch = ts::pentagon_patch();
    for (int v : {0, 1, 5}) {
        std::set<int> prev;
        for (int radius = 0; radius <= 2; ++radius) {
            CellComplex b = ball(patch, v, radius);
            std::set<int> cells;
            for (int id : b.all_cells()) cells.insert(id);
            CHECK(std::includes(cells.begin(), cells.end(), prev.begin(), prev.end()));
            prev = std::move(cells);
        }
    }
}

TEST_CASE("colored incidence encoding") {
    std::vector<int> ids;
    ColoredGraph pent = to_colored_graph(ts::single_pentagon(), &ids);
    CHECK(pent.n == 11);
    CHECK(ids.size() == 11);
    std::set<int> colors(pent.color.begin(), pent.color.end());
    CHECK(colors.size() == 3);

    ColoredGraph empty = to_colored_graph(CellComplex{});
    CHECK(empty.n == 0);

    // a graph as a 1-complex: m + n + mn incidence nodes
    Graph k32 = Graph({0, 1, 2, 3, 4}, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    ColoredGraph enc = to_colored_graph(k32.to_cell_complex());
    CHECK(enc.n == 5 + 6);
}

TEST_CASE("incidence-graph automorphism order is invariant under cell relabeling") {
    CellComplex patch = ts::pentagon_patch();
    FactoredNat base_order = automorphism_group(to_colored_graph(patch)).order();
    ts::Lcg rng(77);
    for (int round = 0; round < 3; ++round) {
        auto ids = patch.all_cells();
        auto perm = rng.permutation(static_cast<int>(ids.size()));
        std::map<int, int> remap;
        for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = 1000 + perm[i];
        CellComplex renamed;
        for (int id : ids) {
            const Cell& cell = patch.cell(id);
            Cell copy;
            copy.id = remap.at(cell.id);
            copy.dim = cell.dim;
            for (int f : cell.faces) copy.faces.push_back(remap.at(f));
            copy.label = cell.label;
            renamed.add_cell(copy);
        }
        REQUIRE(validate(renamed).valid);
        CHECK(automorphism_group(to_colored_graph(renamed)).order() == base_order);
    }
}

TEST_CASE("graph type invariants") {
    CHECK_THROWS(Graph({0, 1}, {{0, 0}}));                      // loop
    CHECK_THROWS(Graph({0, 1}, {{0, 1}, {1, 0}}));              // multi-edge
    CHECK_THROWS(Graph({0, 1}, {{0, 2}}));                      // missing endpoint
    CHECK_THROWS(Graph({0, 1}, {{0, 1}}, {{0, "a"}, {1, "a"}}));  // edge inside a class
    Graph typed({0, 1}, {{0, 1}}, {{0, "a"}, {1, "b"}});
    CHECK(typed.typed());
    CHECK(typed.sides().size() == 2);
    auto parts = ts::cycle_graph(6).bipartition();
    REQUIRE(parts.has_value());
    CHECK((*parts)[0].size() == 3);
    CHECK_FALSE(ts::cycle_graph(5).bipartition().has_value());
}

TEST_CASE("complex json round trip") {
    CellComplex patch = ts::pentagon_patch();
    CellComplex back = complex_from_json(complex_to_json(patch));
    CHECK(back.cell_count() == patch.cell_count());
    CHECK(complex_to_json(back) == complex_to_json(patch));

    Graph k32 = Graph({0, 1, 2, 3, 4}, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
                      {{0, "left"}, {1, "left"}, {2, "left"}, {3, "right"}, {4, "right"}});
    Graph gback = graph_from_json(graph_to_json(k32));
    CHECK(graph_to_json(gback) == graph_to_json(k32));
    // the cell form is accepted for graphs as well
    Graph from_cells = graph_from_json(complex_to_json(k32.to_cell_complex()));
    CHECK(from_cells.edge_count() == 6);
    CHECK(from_cells.typed());
}

}  // TEST_SUITE
