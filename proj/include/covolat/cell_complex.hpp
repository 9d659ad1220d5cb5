// cell_complex.hpp
//
// Finite combinatorial polyhedral complexes. Cells carry opaque integer ids
// and per-cell boundary lists of codimension-1 faces; no geometric data is
// ever stored. Graphs are the 1-dimensional case with an optional
// 2-coloring of vertices (the type function of a bipartite incidence
// structure).

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "covolat/colored_graph.hpp"

namespace covolat {

struct Cell {
    int id = 0;
    int dim = 0;
    std::vector<int> faces;  // ids of codimension-1 faces
    std::optional<std::string> label;
};

struct ValidationResult {
    bool valid = true;
    std::string problem;  // first violation found, empty when valid
};

class CellComplex {
public:
    CellComplex() = default;

    /// Adds a cell; ids must be unique across all dimensions.
    void add_cell(Cell cell);

    int dim() const { return dim_; }
    bool has_cell(int id) const { return index_.count(id) != 0; }
    const Cell& cell(int id) const;
    std::size_t cell_count() const { return cells_.size(); }
    std::size_t cell_count(int dim) const;

    /// Cell ids of one dimension, ascending.
    std::vector<int> cells_of_dim(int dim) const;
    /// All cell ids ascending by (dim, id).
    std::vector<int> all_cells() const;

    /// Cells of dimension dim(c)+1 whose boundary contains c.
    std::vector<int> cofaces(int id) const;

    /// Boundary cycle of a 2-cell as aligned (vertex, edge) sequences:
    /// edge[i] joins vertex[i] and vertex[i+1 mod r]. Throws if the
    /// boundary is not a single simple closed cycle.
    struct FaceCycle {
        std::vector<int> vertices;
        std::vector<int> edges;
    };
    FaceCycle face_cycle(int face_id) const;

    /// Endpoints of a 1-cell.
    std::pair<int, int> edge_endpoints(int edge_id) const;

private:
    int dim_ = 0;
    std::vector<Cell> cells_;          // insertion order
    std::map<int, std::size_t> index_; // id -> position in cells_

    friend ValidationResult validate(const CellComplex& c);
};

/// Checks the structural invariants: face references exist one dimension
/// down, 1-cells have two distinct endpoints, 2-cell boundaries are single
/// simple closed cycles. Reports the first violation in (dim, id) order.
ValidationResult validate(const CellComplex& c);

class Graph {
public:
    Graph() = default;
    /// Vertices, undirected edges (no loops, no multi-edges), optional
    /// 2-coloring. When types are given, every vertex must be typed with
    /// one of exactly two values and every edge must join the classes.
    Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges,
          std::map<int, std::string> types = {});

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::map<int, std::string>& types() const { return types_; }
    bool typed() const { return !types_.empty(); }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(int v) const;
    bool has_edge(int a, int b) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Vertex ids of each type class; requires typed(). Classes ordered by
    /// type name.
    std::vector<std::vector<int>> sides() const;

    /// Position of v in the sorted vertex list.
    int vertex_index(int v) const;

    /// Monochrome encoding (full automorphism group) or side-colored
    /// encoding (type-preserving subgroup).
    ColoredGraph to_colored(bool use_types = false) const;

    CellComplex to_cell_complex() const;
    static Graph from_cell_complex(const CellComplex& c);

    bool is_connected() const;
    /// Proper 2-coloring when one exists (unique per connected component up
    /// to swapping); nullopt when not bipartite.
    std::optional<std::vector<std::vector<int>>> bipartition() const;

private:
    std::vector<int> vertices_;                 // sorted
    std::vector<std::pair<int, int>> edges_;    // normalized a < b, sorted
    std::map<int, std::string> types_;
    std::vector<std::vector<int>> adjacency_;   // by vertex index
};

/// The link of vertex v in a 2-complex: one graph-vertex per 1-cell at v,
/// one graph-edge per 2-cell at v joining the two boundary 1-cells at v.
Graph link(const CellComplex& c, int v);

/// Combinatorial ball around cell sigma: B(sigma,0) is sigma with its
/// closure; B(sigma,n) adds every top-dimensional cell meeting the previous
/// ball, with all faces. Cell ids are preserved, so the result identifies
/// its cells inside c.
CellComplex ball(const CellComplex& c, int sigma, int radius);

/// Incidence encoding: one graph-vertex per cell colored by (dimension,
/// label), edges joining each cell to its codimension-1 faces. The
/// automorphisms of this colored graph are exactly the label-preserving
/// cellular automorphisms of c. cell_ids_out (optional) receives the cell
/// id of each graph vertex.
ColoredGraph to_colored_graph(const CellComplex& c, std::vector<int>* cell_ids_out = nullptr);

}  // namespace covolat
