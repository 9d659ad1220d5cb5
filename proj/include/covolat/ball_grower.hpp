// ball_grower.hpp
//
// Grows combinatorial balls of the unique polygonal complex whose faces are
// r-gons and whose vertex links are all K_{m,n}, and computes the tower of
// ball automorphism groups with the kernel/image factorization of each
// restriction step.
//
// Growth is by alternating saturation: the ball of radius k+1 is obtained
// from the ball of radius k by completing the link of every radius-k vertex
// to K_{m,n} — filling each vertex's edge set to m+n (new edges end at new
// vertices) and spawning one r-gon for every absent opposite-side edge pair.
// Uniqueness of the target complex makes any completion order produce
// isomorphic balls; the completion order is still deterministic (sorted
// vertex ids) so outputs are byte-reproducible, and a test hook allows
// permuting it.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "covolat/cell_complex.hpp"
#include "covolat/exact.hpp"
#include "covolat/law.hpp"

namespace covolat {

struct GrowLimits {
    int max_mn = 3;                 // per-side cap on m and n
    int max_r = 8;
    std::uint64_t size_cap = 4096;  // guard on mn·r^radius
};

struct GrownBall {
    CellComplex complex;
    int center = 0;
    int radius = 0;
    int m = 0, n = 0, r = 0;
    std::vector<int> boundary_vertices;          // vertices with incomplete links
    std::vector<std::vector<int>> radius_cells;  // cell ids of the radius-k ball, k = 0..radius
};

/// Grows B(x, radius) for radius <= 2. Requires m,n >= 2, r >= 5, r even
/// when m != n, parameters within limits. completion_order optionally
/// permutes the order in which the radius-1 vertices are completed (indices
/// into the sorted vertex list); identity order when empty.
GrownBall grow_ball(int m, int n, int r, int radius, const GrowLimits& limits = {},
                    std::span<const int> completion_order = {});

struct TowerRow {
    int radius = 0;
    FactoredNat order;                        // |Aut(B(x, radius))|
    std::optional<FactoredNat> kernel_order;  // of the restriction to the previous ball
    std::optional<FactoredNat> image_order;
};

/// Ball automorphism orders for radii 0..max_radius together with the
/// kernel and image of each restriction step; |H_{k}| = |K|·|I| is asserted
/// exactly for every step.
std::vector<TowerRow> aut_tower(int m, int n, int r, int max_radius,
                                const GrowLimits& limits = {});
std::vector<TowerRow> aut_tower(const GrownBall& ball);

/// Every ball order must satisfy rules (a) and (b) of the vertex law
/// applied to 1/|H_k|; every kernel order must satisfy rule (a).
Verdict check_tower_divisibility(const LawData& law, std::span<const TowerRow> rows);

/// Sub-ball of a grown ball as its own complex (cell ids preserved).
CellComplex ball_at_radius(const GrownBall& ball, int radius);

}  // namespace covolat
