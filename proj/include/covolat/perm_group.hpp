// perm_group.hpp
//
// Permutation groups given by generators, with exact order computation via
// a base and stabilizer chain. Orders are kept factored; chains can be
// built with a prescribed initial base segment, which makes pointwise
// stabilizers of arbitrary vertex sets directly available.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covolat/bignum.hpp"
#include "covolat/exact.hpp"

namespace covolat {

struct Perm {
    std::vector<int> img;  // img[x] = image of x

    static Perm identity(int degree);
    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }
    bool is_identity() const;
    Perm inverse() const;
    /// (a.then_after(b))(x) = a(b(x)) — apply b first.
    static Perm compose(const Perm& a, const Perm& b);
    bool operator==(const Perm& o) const { return img == o.img; }

    /// Disjoint cycle notation over external ids; "()" for the identity.
    std::string cycle_string(std::span<const int> external_ids) const;
};

class PermGroup {
public:
    /// Trivial group on `degree` points.
    explicit PermGroup(int degree);

    /// Group generated by `gens`; the stabilizer chain's base starts with
    /// `base_prefix` (every listed point becomes a base point, in order).
    PermGroup(int degree, std::vector<Perm> gens, std::vector<int> base_prefix = {});

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return input_gens_; }

    FactoredNat order() const;
    BigUint order_value() const;
    bool is_trivial() const;

    bool contains(const Perm& p) const;

    /// Orbits of the natural action, each sorted, ordered by minimum.
    std::vector<std::vector<int>> orbits() const;

    /// Subgroup fixing every listed point, as its own group.
    PermGroup pointwise_stabilizer(std::span<const int> points) const;

    /// Full element list; throws if the group order exceeds `cap`.
    std::vector<Perm> elements(std::size_t cap = 20000) const;

    /// True iff the point set is mapped onto itself by every generator.
    bool set_invariant(std::span<const int> points) const;

    /// The group induced on an invariant point set (restriction of the
    /// action); domain is re-indexed by the sorted point list.
    PermGroup restrict_to(std::span<const int> points) const;

private:
    struct Level {
        int base = -1;
        std::vector<int> gen_ids;          // indices into strong_
        std::vector<int> orbit;            // discovery order, orbit[0] == base
        std::vector<int> orbit_pos;        // point -> index in orbit, -1 outside
        std::vector<Perm> rep;             // rep[i] maps base -> orbit[i]
        std::vector<Perm> rep_inv;
    };

    int degree_ = 0;
    std::vector<Perm> input_gens_;
    std::vector<Perm> strong_;
    std::vector<int> base_;
    std::vector<Level> levels_;

    void build(std::vector<int> base_prefix);
    void rebuild_orbit(std::size_t level);
    void append_base_point(int point);
    // Returns the residue and the level index where sifting stopped
    // (levels_.size() when it ran off the chain without reducing to id).
    std::pair<Perm, std::size_t> sift(Perm p, std::size_t from_level) const;
};

}  // namespace covolat
