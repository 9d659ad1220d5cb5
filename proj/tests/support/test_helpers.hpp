// Shared test support: independent oracles and generators. Nothing here may
// call into the search/refinement machinery it is used to check.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covolat/cell_complex.hpp"
#include "covolat/colored_graph.hpp"

namespace covolat::testsupport {

/// Exhaustive oracle: counts color-preserving vertex bijections that
/// preserve adjacency, by enumerating all permutations within each color
/// class. Only sane for graphs with small color classes (n <= ~10).
std::uint64_t count_automorphisms_exhaustive(const ColoredGraph& g);

/// Independent backtracking counter (plain DFS over vertex images with
/// color/degree/adjacency consistency — no partition refinement). Handles
/// medium rigid graphs such as ball incidence graphs.
std::uint64_t count_automorphisms_backtrack(const ColoredGraph& g);

Graph cycle_graph(int k);
Graph path_graph(int k);

/// Deterministic pseudo-random graph: edge (i,j) present when the next LCG
/// draw is below density. Density in [0,1].
Graph random_graph(int n, double density, std::uint64_t seed);

/// Deterministic LCG; used wherever tests need reproducible randomness.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next();
    std::uint64_t next_below(std::uint64_t bound);
    double next_unit();
    std::vector<int> permutation(int n);

private:
    std::uint64_t state_;
};

/// Exact fraction sum with plain 64-bit arithmetic: sum of 1/orders as a
/// reduced (numerator, denominator) pair. Independent of the Rat type.
std::pair<std::uint64_t, std::uint64_t> frac_sum_oracle(const std::vector<std::uint64_t>& orders);

/// The Petersen graph built the other way: complement of the
/// intersecting-pairs graph on the 2-subsets of {1..5}.
Graph kneser_5_2_complement_construction();

/// Incidence graph of the generalized quadrangle of order (2,2): points are
/// the 2-subsets of {1..6}, lines the perfect matchings, incidence is
/// membership. 15+15 vertices, 45 flags, diameter 4, girth 8. Stands in for
/// user-supplied rank-2 building data beyond the plane case.
Graph doily_quadrangle();

/// One pentagon: 5 vertices (0..4), 5 edges (5..9), one 2-cell (10).
CellComplex single_pentagon();

/// Four pentagons around a central vertex, glued so the center's link is a
/// 4-cycle — the radius-1 ball of the right-angled pentagon complex with
/// K_{2,2} links, built by hand as an oracle. 13 vertices, 16 edges,
/// 4 faces; the center is vertex 0.
CellComplex pentagon_patch();

/// Runs the covolat CLI with the given argument string; returns stdout and
/// stores the exit code. stdin_data, when non-empty, is piped in.
std::string run_cli(const std::string& args, int* exit_code, const std::string& stdin_data = "");

/// Writes text to a fresh temp file and returns its path.
std::string write_temp(const std::string& text, const std::string& tag);

}  // namespace covolat::testsupport
