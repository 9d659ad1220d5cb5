// aut_search.hpp
//
// Automorphism groups of colored graphs via equitable-partition refinement
// interleaved with individualization backtracking. Generators are harvested
// from discovered automorphisms; discovered generators prune the search
// through orbit computations. Everything is deterministic: the
// individualization target is the first largest non-singleton cell and
// candidates are tried in ascending vertex order.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "covolat/cell_complex.hpp"
#include "covolat/colored_graph.hpp"
#include "covolat/perm_group.hpp"

namespace covolat {

/// Full color- and adjacency-preserving automorphism group.
PermGroup automorphism_group(const ColoredGraph& g);

/// Subgroup fixing every vertex of S pointwise, computed by individualizing
/// the colors of S.
PermGroup pointwise_fixator(const ColoredGraph& g, std::span<const int> S);

/// Isomorphism test for connected colored graphs (colors matched by
/// color_key). Runs the automorphism search on the disjoint union and stops
/// at the first generator crossing the two copies.
bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

/// Automorphism group of a graph; the permutation domain is the sorted
/// vertex list. With type_preserving the declared bipartition sides are
/// preserved setwise (requires a typed graph).
PermGroup graph_automorphisms(const Graph& g, bool type_preserving = false);

/// Subgroup of the (full or type-preserving) automorphism group fixing the
/// listed vertices pointwise; vertex_ids are external ids.
PermGroup graph_pointwise_fixator(const Graph& g, std::span<const int> vertex_ids,
                                  bool type_preserving = false);

/// Type-preserving subgroup of a bipartite graph with declared sides.
PermGroup type_preserving_subgroup(const Graph& g);

/// Orbits of G on the edge set; one representative (min edge) per orbit,
/// in external ids.
std::vector<std::pair<int, int>> edge_orbit_reps(const Graph& g, const PermGroup& G);

/// True iff G acts transitively on the edges of g.
bool is_edge_transitive(const Graph& g, const PermGroup& G);

/// Kernel and image of the restriction homomorphism from G to its action on
/// an invariant point set. The kernel is the pointwise stabilizer inside G;
/// the image order is computed independently from the restricted action and
/// the product identity |G| = |K|·|I| is asserted.
struct KernelImage {
    PermGroup kernel;
    FactoredNat image_order;
};
KernelImage restriction_kernel_image(const PermGroup& G, std::span<const int> sub_points);

}  // namespace covolat
