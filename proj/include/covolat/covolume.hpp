// covolume.hpp
//
// S-covolumes from quotient stabiliser data. A quotient is just a list of
// orbit representatives with stabiliser orders; the covolume in each
// dimension is the sum of reciprocals, and c(X) is the ratio of the vertex
// and face covolumes. Canonical quotients for the two one-link-type
// families are provided.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covolat/cell_complex.hpp"
#include "covolat/exact.hpp"

namespace covolat {

struct QuotientCell {
    std::string label;
    int dim = 0;                    // 0, 1 or 2
    std::uint64_t order = 1;        // stabiliser order, >= 1
};

struct QuotientData {
    std::vector<QuotientCell> cells;

    /// Validates the invariants (non-empty, positive orders, dims 0..2).
    void check() const;
};

/// Sum over the cells of one dimension of 1/stabiliser order, in lowest
/// terms. Dimension 0 is the normalized covolume; dimension 2 the face
/// covolume. Throws when no cell of the dimension exists.
Rat s_covolume(const QuotientData& q, int dim);

/// Polygon quotient with trivial face stabiliser, edge stabilisers of
/// orders m and n (alternating when m != n, which forces r even) and
/// vertex stabilisers of order mn.
QuotientData bourdon_lattice(int m, int n, int r);

struct BuildingOrders {
    std::uint64_t B = 1;
    std::uint64_t P1 = 1;
    std::uint64_t P2 = 1;
    std::uint64_t G = 1;
};

/// Polygon quotient with face stabiliser B, edge stabilisers alternating
/// P1/P2 and vertex stabilisers G; r must be even. With explicit orders the
/// divisibility chain B | P_i | G is enforced. Without explicit orders they
/// are derived from the link: G = |type-preserving automorphism group|,
/// B = G / #edges, P_i = G / #side_i — which requires that group to act
/// transitively on edges and on each side.
QuotientData building_lattice(const Graph& L, int r,
                              std::optional<BuildingOrders> orders = std::nullopt);

/// c(X) = vertex covolume / face covolume. Throws when either dimension is
/// absent.
Rat c_of_X(const QuotientData& q);

/// Degree-k cover model for testing: k copies of every cell with unchanged
/// stabiliser orders. Scales covolumes by k and preserves c(X).
QuotientData cover_quotient(const QuotientData& q, int k);

}  // namespace covolat
