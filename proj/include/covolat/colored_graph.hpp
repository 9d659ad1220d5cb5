// colored_graph.hpp
//
// Plain vertex-colored undirected graph on 0..n-1, the common carrier for
// automorphism searches. Colors partition the vertices; automorphisms must
// preserve color and adjacency. color_key gives each color class a stable
// semantic name so graphs from different sources can be compared.

#pragma once

#include <string>
#include <vector>

namespace covolat {

struct ColoredGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted, loop-free, symmetric
    std::vector<int> color;             // color id per vertex
    std::vector<std::string> color_key; // semantic name per color id

    static ColoredGraph empty() { return ColoredGraph{}; }

    void add_vertex(int c) {
        adj.emplace_back();
        color.push_back(c);
        ++n;
    }
    void add_edge(int a, int b);
    void finalize();  // sorts adjacency lists, checks invariants

    std::size_t edge_count() const;
    bool has_edge(int a, int b) const;

    /// Disjoint union; right-hand colors are matched by color_key, unknown
    /// keys get fresh ids. Returns the vertex offset of the second graph.
    static ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b, int* offset_out);

    bool is_connected() const;
};

}  // namespace covolat
