// links.hpp
//
// Constructors for the link graphs used throughout: complete bipartite
// graphs, the Petersen graph, and point-line incidence graphs of projective
// planes over small finite fields. Links that are not constructed
// explicitly can be registered by their automorphism and fixator orders.

#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "covolat/cell_complex.hpp"
#include "covolat/exact.hpp"

namespace covolat {

/// Complete bipartite graph K_{m,n}, m,n >= 2. Vertices 0..m-1 typed
/// "left", m..m+n-1 typed "right"; all mn edges present.
Graph complete_bipartite(int m, int n);

/// The Petersen graph: vertices are the 2-element subsets of {1..5} in
/// lexicographic order, edges join disjoint pairs.
Graph petersen();

/// Supported field sizes: primes up to 13, plus 4, 8, 9 via fixed
/// irreducible polynomials.
bool projective_plane_supported(std::uint64_t q);

/// Point-line incidence graph of the projective plane of order q:
/// q^2+q+1 points and as many lines, each line through q+1 points,
/// edges the incident point-line pairs. Points and lines are canonicalized
/// as normalized homogeneous triples (first nonzero coordinate 1), ordered
/// lexicographically; point ids come first, then line ids. Vertices typed
/// "point"/"line".
Graph projective_plane_incidence(std::uint64_t q);

/// Validates the incidence-graph conditions of a generalized m-gon:
/// connected, bipartite, diameter m, girth 2m. Returns the graph with its
/// bipartition declared (computed when absent). Throws on failure.
Graph generalized_polygon_load(const Graph& g, int m);

/// Graph diameter (max eccentricity); throws on disconnected input.
int graph_diameter(const Graph& g);
/// Shortest cycle length, or nullopt for a forest.
std::optional<int> graph_girth(const Graph& g);

struct RegisteredLink {
    std::string name;
    FactoredNat aut_order;
    FactoredNat fixator_order;
    std::optional<std::uint64_t> edge_count;
};

/// Validates the divisibility invariant and returns the record.
RegisteredLink register_link(std::string name, FactoredNat aut_order, FactoredNat fixator_order,
                             std::optional<std::uint64_t> edge_count = std::nullopt);

/// Single-writer, read-concurrent store of registered links.
class LinkRegistry {
public:
    void put(RegisteredLink link);
    std::optional<RegisteredLink> get(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    mutable std::shared_mutex mutex_;
    std::vector<RegisteredLink> links_;
};

}  // namespace covolat
