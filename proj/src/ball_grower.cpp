#include "covolat/ball_grower.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "covolat/aut_search.hpp"

namespace covolat {

namespace {

// Side 0 edges fill the size-m side of every link (each lies in n faces);
// side 1 edges fill the size-n side (each lies in m faces). Sides are
// global when m != n (faces alternate around every r-gon, r even) and
// purely local otherwise.
constexpr int kUntyped = -1;

struct GrowEdge {
    int a = 0, b = 0;
    int side = kUntyped;
    std::vector<int> faces;  // closed faces and open stubs containing this edge
};

// A face of the ball. While open, the boundary is a simple path
// vs[0] -es[0]- vs[1] ... -es[k-1]- vs[k]; it acquires one corner at a time
// as the vertices at its ends get their links completed, and is closed with
// fresh cells once no end can extend any further. Closed faces hold the
// full r-cycle with es[i] joining vs[i] and vs[i+1 mod r].
struct GrowFace {
    bool closed = false;
    std::vector<int> vs;
    std::vector<int> es;

    int chain_edges() const { return static_cast<int>(es.size()); }
};

class Grower {
public:
    Grower(int m, int n, int r) : m_(m), n_(n), r_(r), typed_(m != n) {}

    int add_vertex() {
        int id = next_id_++;
        vertices_.push_back(id);
        edges_at_[id] = {};
        return id;
    }

    void complete_link(int v);
    void close_all_stubs();

    GrownBall finish(int center, int radius, std::vector<std::vector<int>> radius_cells) const;

    std::vector<int> sorted_vertices() const {
        std::vector<int> out = vertices_;
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> all_cell_ids() const {
        std::vector<int> out = vertices_;
        for (const auto& [eid, e] : edges_) out.push_back(eid);
        for (const auto& [fid, f] : faces_) out.push_back(fid);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int m_, n_, r_;
    bool typed_;
    int next_id_ = 0;
    std::vector<int> vertices_;
    std::map<int, std::vector<int>> edges_at_;
    std::map<int, GrowEdge> edges_;
    std::map<int, GrowFace> faces_;
    std::set<int> completed_;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::logic_error("grow_ball: " + what);
    }

    int add_edge(int a, int b, int side) {
        int id = next_id_++;
        edges_[id] = GrowEdge{a, b, typed_ ? side : kUntyped, {}};
        edges_at_[a].push_back(id);
        edges_at_[b].push_back(id);
        return id;
    }

    int other_end(int eid, int v) const {
        const auto& e = edges_.at(eid);
        return e.a == v ? e.b : e.a;
    }

    int thickness_of_side(int side) const { return side == 0 ? n_ : m_; }

    int thickness(int eid) const {
        if (!typed_) return m_;
        return thickness_of_side(edges_.at(eid).side);
    }

    void attach_face(int fid, int eid) {
        auto& e = edges_.at(eid);
        e.faces.push_back(fid);
        if (static_cast<int>(e.faces.size()) > thickness(eid))
            fail("edge thickness overflow at edge " + std::to_string(eid));
    }

    // How one face meets the vertex v: a full corner (edge pair) or an open
    // end arriving along one edge.
    struct Meeting {
        int fid = 0;
        bool is_corner = false;
        int e1 = -1, e2 = -1;  // corner pair, or e1 = the end edge
        bool at_front = false; // for ends: which end of the chain
    };
    std::vector<Meeting> meetings_at(int v) const;

    // The link completion works over real edge ids plus virtual ids for the
    // fresh edges to be created; virtual link-vertex ids are negative.
    struct SideChoice {
        std::map<int, int> side;      // link-vertex id (real or virtual) -> side
        std::vector<int> virtuals;    // virtual ids in creation order
    };
    std::vector<SideChoice> side_choices(int v, const std::vector<int>& eids,
                                         const std::vector<Meeting>& meets) const;

    struct Half {
        int fid = 0;
        bool at_front = false;
        int edge = -1;
    };
    // partner[i] = {-2,-2} unassigned, {-1,j} join with half j,
    // {p,-1} extension through link-vertex p (possibly virtual)
    bool match_halves(std::size_t i, const std::vector<Half>& halves, const SideChoice& choice,
                      int v, std::set<std::pair<int, int>>& used,
                      std::vector<std::pair<int, int>>& partner) const;

    int chain_far_end(const Half& h) const {
        const GrowFace& f = faces_.at(h.fid);
        return h.at_front ? f.vs.back() : f.vs.front();
    }

    bool chain_contains(int fid, int vertex) const {
        const GrowFace& f = faces_.at(fid);
        return std::find(f.vs.begin(), f.vs.end(), vertex) != f.vs.end();
    }

    void extend_stub(int fid, bool at_front, int v, int eid);
    void join_stubs(int fid, bool front_a, int gid, bool front_b, int v);
    void close_stub(int fid);
    void spawn_stub(int v, int ea, int eb);
    void verify_complete_link(int v) const;
};

std::vector<Grower::Meeting> Grower::meetings_at(int v) const {
    std::vector<Meeting> out;
    std::set<int> seen;
    std::vector<int> eids = edges_at_.at(v);
    std::sort(eids.begin(), eids.end());
    for (int eid : eids) {
        for (int fid : edges_.at(eid).faces) {
            if (!seen.insert(fid).second) continue;
            const GrowFace& f = faces_.at(fid);
            int visits = 0;
            if (f.closed) {
                for (std::size_t i = 0; i < f.vs.size(); ++i) {
                    if (f.vs[i] != v) continue;
                    std::size_t k = f.vs.size();
                    out.push_back({fid, true, f.es[(i + k - 1) % k], f.es[i], false});
                    ++visits;
                }
            } else {
                std::size_t k = f.vs.size();
                for (std::size_t i = 0; i < k; ++i) {
                    if (f.vs[i] != v) continue;
                    ++visits;
                    if (i == 0) out.push_back({fid, false, f.es.front(), -1, true});
                    else if (i + 1 == k) out.push_back({fid, false, f.es.back(), -1, false});
                    else out.push_back({fid, true, f.es[i - 1], f.es[i], false});
                }
            }
            if (visits > 1) fail("face visits vertex " + std::to_string(v) + " twice");
        }
    }
    return out;
}

std::vector<Grower::SideChoice> Grower::side_choices(int v, const std::vector<int>& eids,
                                                     const std::vector<Meeting>& meets) const {
    // adjacency of the partial link: corners join their two edges
    std::map<int, std::vector<int>> link_adj;
    for (int eid : eids) link_adj[eid] = {};
    for (const auto& mt : meets) {
        if (!mt.is_corner) continue;
        link_adj[mt.e1].push_back(mt.e2);
        link_adj[mt.e2].push_back(mt.e1);
    }
    auto with_virtuals = [&](std::map<int, int> side) {
        SideChoice choice;
        int on_a = 0, on_b = 0;
        for (const auto& [e, s] : side) (s == 0 ? on_a : on_b)++;
        int next_virtual = -10;  // below the -1/-2 partner sentinels
        for (int k = on_a; k < m_; ++k) {
            side[next_virtual] = 0;
            choice.virtuals.push_back(next_virtual--);
        }
        for (int k = on_b; k < n_; ++k) {
            side[next_virtual] = 1;
            choice.virtuals.push_back(next_virtual--);
        }
        choice.side = std::move(side);
        return choice;
    };

    std::vector<SideChoice> out;
    if (typed_) {
        std::map<int, int> side;
        for (int eid : eids) side[eid] = edges_.at(eid).side;
        for (int eid : eids) {
            for (int o : link_adj.at(eid)) {
                if (side[eid] == side[o])
                    fail("co-facial edges on one side at vertex " + std::to_string(v));
            }
        }
        int on_a = 0, on_b = 0;
        for (const auto& [e, s] : side) (s == 0 ? on_a : on_b)++;
        if (on_a > m_ || on_b > n_) fail("link side overflow at vertex " + std::to_string(v));
        out.push_back(with_virtuals(std::move(side)));
        return out;
    }
    // 2-color the components of the partial link, then enumerate the
    // feasible packings of the components into the two sides
    std::map<int, int> comp, color;
    std::vector<std::pair<int, int>> comp_sizes;
    int ncomp = 0;
    for (int start : eids) {
        if (comp.count(start)) continue;
        int ci = ncomp++;
        comp_sizes.push_back({0, 0});
        std::vector<int> stack = {start};
        comp[start] = ci;
        color[start] = 0;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            (color[e] == 0 ? comp_sizes[ci].first : comp_sizes[ci].second)++;
            for (int o : link_adj.at(e)) {
                if (!comp.count(o)) {
                    comp[o] = ci;
                    color[o] = 1 - color[e];
                    stack.push_back(o);
                } else if (color[o] == color[e]) {
                    fail("partial link is not bipartite at vertex " + std::to_string(v));
                }
            }
        }
    }
    for (std::uint32_t mask = 0; mask < (1u << ncomp); ++mask) {
        int on_a = 0, on_b = 0;
        for (int ci = 0; ci < ncomp; ++ci) {
            bool flip = (mask >> ci) & 1u;
            on_a += flip ? comp_sizes[ci].second : comp_sizes[ci].first;
            on_b += flip ? comp_sizes[ci].first : comp_sizes[ci].second;
        }
        if (on_a > m_ || on_b > n_) continue;
        std::map<int, int> side;
        for (int eid : eids) {
            bool flip = (mask >> comp.at(eid)) & 1u;
            side[eid] = flip ? 1 - color.at(eid) : color.at(eid);
        }
        out.push_back(with_virtuals(std::move(side)));
    }
    if (out.empty()) fail("partial link does not embed in the link at vertex " + std::to_string(v));
    return out;
}

bool Grower::match_halves(std::size_t i, const std::vector<Half>& halves, const SideChoice& choice,
                          int v, std::set<std::pair<int, int>>& used,
                          std::vector<std::pair<int, int>>& partner) const {
    if (i == halves.size()) return true;
    const Half& h = halves[i];
    const int hside = choice.side.at(h.edge);
    const int hlen = faces_.at(h.fid).chain_edges();
    auto norm = [](int a, int b) { return std::pair<int, int>{std::min(a, b), std::max(a, b)}; };
    // joining with a later half consumes the pair of the two end edges
    for (std::size_t j = i + 1; j < halves.size(); ++j) {
        const Half& o = halves[j];
        if (partner[j].first != -2) continue;
        if (choice.side.at(o.edge) == hside) continue;
        auto pair = norm(h.edge, o.edge);
        if (used.count(pair)) continue;
        if (h.fid == o.fid) continue;  // a chain meeting itself is rejected upstream
        int total = hlen + faces_.at(o.fid).chain_edges();
        if (total > r_) continue;
        if (total == r_ && chain_far_end(h) != chain_far_end(o)) continue;
        // the merged boundary must stay simple: the chains may share only v,
        // plus the common far end when they close up
        {
            const GrowFace& a = faces_.at(h.fid);
            bool overlap = false;
            for (int w : a.vs) {
                if (w == v) continue;
                if (total == r_ && w == chain_far_end(h)) continue;
                if (chain_contains(o.fid, w)) overlap = true;
            }
            if (overlap) continue;
        }
        used.insert(pair);
        partner[i] = {-1, static_cast<int>(j)};
        partner[j] = {-1, static_cast<int>(i)};
        if (match_halves(i + 1, halves, choice, v, used, partner)) return true;
        used.erase(pair);
        partner[i] = {-2, -2};
        partner[j] = {-2, -2};
    }
    // extending through another link-vertex consumes the pair (end edge, p)
    for (const auto& [p, pside] : choice.side) {
        if (pside == hside) continue;
        auto pair = norm(h.edge, p);
        if (used.count(pair)) continue;
        int new_len = hlen + 1;
        if (new_len > r_) continue;
        if (p >= 0) {
            if (static_cast<int>(edges_.at(p).faces.size()) >= thickness(p)) continue;
            int far = other_end(p, v);
            if (new_len == r_) {
                if (far != chain_far_end(h)) continue;
            } else if (chain_contains(h.fid, far)) {
                continue;  // the boundary must stay simple
            }
        } else {
            // a fresh edge ends at a fresh vertex, so it can never close
            if (new_len == r_) continue;
        }
        used.insert(pair);
        partner[i] = {p, -1};
        if (match_halves(i + 1, halves, choice, v, used, partner)) return true;
        used.erase(pair);
        partner[i] = {-2, -2};
    }
    return false;
}

void Grower::extend_stub(int fid, bool at_front, int v, int eid) {
    GrowFace& f = faces_.at(fid);
    int far = other_end(eid, v);
    if (at_front) {
        if (f.vs.front() != v) fail("stub end mismatch");
        f.vs.insert(f.vs.begin(), far);
        f.es.insert(f.es.begin(), eid);
    } else {
        if (f.vs.back() != v) fail("stub end mismatch");
        f.vs.push_back(far);
        f.es.push_back(eid);
    }
    attach_face(fid, eid);
    if (f.chain_edges() == r_) {
        if (f.vs.front() != f.vs.back()) fail("face of full length does not close");
        f.vs.pop_back();
        f.closed = true;
    } else if (f.chain_edges() > r_) {
        fail("face boundary exceeds the gonality");
    }
}

void Grower::join_stubs(int fid, bool front_a, int gid, bool front_b, int v) {
    GrowFace& f = faces_.at(fid);
    GrowFace g = faces_.at(gid);  // copy; gid dissolves into fid
    if ((front_a ? f.vs.front() : f.vs.back()) != v) fail("stub end mismatch");
    if ((front_b ? g.vs.front() : g.vs.back()) != v) fail("stub end mismatch");
    if (front_a) {
        std::reverse(f.vs.begin(), f.vs.end());
        std::reverse(f.es.begin(), f.es.end());
    }
    if (!front_b) {
        std::reverse(g.vs.begin(), g.vs.end());
        std::reverse(g.es.begin(), g.es.end());
    }
    f.vs.insert(f.vs.end(), g.vs.begin() + 1, g.vs.end());
    f.es.insert(f.es.end(), g.es.begin(), g.es.end());
    for (int eid : g.es) {
        auto& faces = edges_.at(eid).faces;
        std::replace(faces.begin(), faces.end(), gid, fid);
    }
    faces_.erase(gid);
    if (f.chain_edges() == r_) {
        if (f.vs.front() != f.vs.back()) fail("face of full length does not close");
        f.vs.pop_back();
        f.closed = true;
    } else if (f.chain_edges() > r_) {
        fail("face boundary exceeds the gonality");
    }
}

void Grower::spawn_stub(int v, int ea, int eb) {
    int fid = next_id_++;
    GrowFace f;
    f.vs = {other_end(ea, v), v, other_end(eb, v)};
    f.es = {ea, eb};
    faces_[fid] = std::move(f);
    attach_face(fid, ea);
    attach_face(fid, eb);
}

void Grower::close_stub(int fid) {
    GrowFace& f = faces_.at(fid);
    if (f.closed) return;
    int need = r_ - f.chain_edges();
    if (need < 1) fail("overlong stub at close-out");
    if (f.vs.back() == f.vs.front()) fail("stub already cyclic at close-out");
    const int end_side = typed_ ? edges_.at(f.es.back()).side : kUntyped;
    auto side_at = [&](int k) {
        if (!typed_) return kUntyped;
        return (k % 2 == 1) ? 1 - end_side : end_side;
    };
    for (int k = 1; k < need; ++k) {
        int w = add_vertex();
        int e = add_edge(f.vs.back(), w, side_at(k));
        f.vs.push_back(w);
        f.es.push_back(e);
        attach_face(fid, e);
    }
    int from = f.vs.back();
    int to = f.vs.front();
    // the final edge joins the chain ends; reuse the edge when the two
    // boundary vertices are already joined
    int last = -1;
    for (int eid : edges_at_.at(from)) {
        if (other_end(eid, from) == to) last = eid;
    }
    if (last == -1) {
        last = add_edge(from, to, side_at(need));
    } else if (typed_ && edges_.at(last).side != side_at(need)) {
        fail("closing edge side mismatch");
    }
    f.es.push_back(last);
    attach_face(fid, last);
    f.closed = true;
}

void Grower::complete_link(int v) {
    std::vector<int> eids = edges_at_.at(v);
    std::sort(eids.begin(), eids.end());
    std::vector<Meeting> meets = meetings_at(v);

    // pairs already owned by corners (checked per side choice below for the
    // opposite-sides invariant)
    std::set<std::pair<int, int>> corner_pairs;
    for (const auto& mt : meets) {
        if (!mt.is_corner) continue;
        std::pair<int, int> pair{std::min(mt.e1, mt.e2), std::max(mt.e1, mt.e2)};
        if (!corner_pairs.insert(pair).second)
            fail("two faces share a corner at vertex " + std::to_string(v));
    }
    std::vector<Half> halves;
    for (const auto& mt : meets) {
        if (!mt.is_corner) halves.push_back({mt.fid, mt.at_front, mt.e1});
    }

    std::vector<std::pair<int, int>> partner;
    SideChoice chosen;
    bool matched = false;
    for (SideChoice& choice : side_choices(v, eids, meets)) {
        std::set<std::pair<int, int>> used = corner_pairs;
        partner.assign(halves.size(), {-2, -2});
        if (match_halves(0, halves, choice, v, used, partner)) {
            chosen = std::move(choice);
            matched = true;
            break;
        }
    }
    if (!matched)
        fail("link completion has no consistent corner assignment at vertex " + std::to_string(v));

    // materialize the fresh edges for the virtual link-vertices
    std::map<int, int> real_of;
    for (int virt : chosen.virtuals) {
        int w = add_vertex();
        real_of[virt] = add_edge(v, w, chosen.side.at(virt));
    }
    std::map<int, int> side;
    for (const auto& [e, s] : chosen.side) side[real_of.count(e) ? real_of[e] : e] = s;

    // joins, then extensions
    for (std::size_t i = 0; i < halves.size(); ++i) {
        if (partner[i].first == -1 && partner[i].second > static_cast<int>(i))
            join_stubs(halves[i].fid, halves[i].at_front, halves[partner[i].second].fid,
                       halves[partner[i].second].at_front, v);
    }
    for (std::size_t i = 0; i < halves.size(); ++i) {
        if (partner[i].first == -2) fail("unassigned stub end at vertex " + std::to_string(v));
        if (partner[i].first >= 0 || real_of.count(partner[i].first)) {
            int p = partner[i].first;
            extend_stub(halves[i].fid, halves[i].at_front, v, real_of.count(p) ? real_of[p] : p);
        }
    }

    // spawn a fresh open face for every pair still unowned
    std::set<std::pair<int, int>> used = corner_pairs;
    for (std::size_t i = 0; i < halves.size(); ++i) {
        if (partner[i].first == -1) {
            int j = partner[i].second;
            int e2 = halves[j].edge;
            used.insert({std::min(halves[i].edge, e2), std::max(halves[i].edge, e2)});
        } else {
            int p = partner[i].first;
            int real_p = real_of.count(p) ? real_of[p] : p;
            used.insert({std::min(halves[i].edge, real_p), std::max(halves[i].edge, real_p)});
        }
    }
    std::vector<int> side_a, side_b;
    for (const auto& [e, s] : side) (s == 0 ? side_a : side_b).push_back(e);
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());
    for (int ea : side_a) {
        for (int eb : side_b) {
            std::pair<int, int> pair{std::min(ea, eb), std::max(ea, eb)};
            if (used.count(pair)) continue;
            used.insert(pair);
            spawn_stub(v, ea, eb);
        }
    }
    completed_.insert(v);
    verify_complete_link(v);
}

void Grower::close_all_stubs() {
    std::vector<int> open;
    for (const auto& [fid, f] : faces_) {
        if (!f.closed) open.push_back(fid);
    }
    std::sort(open.begin(), open.end());
    for (int fid : open) close_stub(fid);
}

void Grower::verify_complete_link(int v) const {
    const auto& eids = edges_at_.at(v);
    if (static_cast<int>(eids.size()) != m_ + n_)
        fail("completed link has wrong vertex count at vertex " + std::to_string(v));
    if (static_cast<int>(meetings_at(v).size()) != m_ * n_)
        fail("completed link has wrong edge count at vertex " + std::to_string(v));
}

GrownBall Grower::finish(int center, int radius, std::vector<std::vector<int>> radius_cells) const {
    GrownBall ball;
    ball.center = center;
    ball.radius = radius;
    ball.m = m_;
    ball.n = n_;
    ball.r = r_;
    for (int vid : vertices_) {
        Cell c;
        c.id = vid;
        c.dim = 0;
        ball.complex.add_cell(std::move(c));
    }
    for (const auto& [eid, e] : edges_) {
        Cell c;
        c.id = eid;
        c.dim = 1;
        c.faces = {e.a, e.b};
        ball.complex.add_cell(std::move(c));
    }
    for (const auto& [fid, f] : faces_) {
        if (!f.closed) throw std::logic_error("grow_ball: open face at finish");
        Cell c;
        c.id = fid;
        c.dim = 2;
        c.faces = f.es;
        ball.complex.add_cell(std::move(c));
    }
    for (int vid : vertices_) {
        if (!completed_.count(vid)) ball.boundary_vertices.push_back(vid);
    }
    std::sort(ball.boundary_vertices.begin(), ball.boundary_vertices.end());
    ball.radius_cells = std::move(radius_cells);
    return ball;
}

}  // namespace

GrownBall grow_ball(int m, int n, int r, int radius, const GrowLimits& limits,
                    std::span<const int> completion_order) {
    if (m < 2 || n < 2) throw std::invalid_argument("grow_ball: need m, n >= 2");
    if (r < 5) throw std::invalid_argument("grow_ball: need r >= 5");
    if (m != n && r % 2 != 0) throw std::invalid_argument("grow_ball: r must be even when m != n");
    if (radius < 0 || radius > 2) throw std::invalid_argument("grow_ball: radius must be 0, 1 or 2");
    if (m > limits.max_mn || n > limits.max_mn)
        throw std::invalid_argument("grow_ball: m or n exceeds the configured cap");
    if (r > limits.max_r) throw std::invalid_argument("grow_ball: r exceeds the configured cap");
    std::uint64_t size = static_cast<std::uint64_t>(m) * n;
    for (int i = 0; i < radius; ++i) size *= static_cast<std::uint64_t>(r);
    if (size > limits.size_cap)
        throw std::invalid_argument("grow_ball: size guard mn·r^radius exceeds the cap");

    Grower grower(m, n, r);
    std::vector<std::vector<int>> snapshots;
    int center = grower.add_vertex();
    snapshots.push_back(grower.all_cell_ids());
    if (radius >= 1) {
        grower.complete_link(center);
        grower.close_all_stubs();
        snapshots.push_back(grower.all_cell_ids());
    }
    if (radius >= 2) {
        std::vector<int> order = grower.sorted_vertices();
        order.erase(std::remove(order.begin(), order.end(), center), order.end());
        if (!completion_order.empty()) {
            if (completion_order.size() != order.size())
                throw std::invalid_argument("grow_ball: completion order has wrong length");
            std::vector<int> permuted(order.size());
            std::vector<char> seen(order.size(), 0);
            for (std::size_t i = 0; i < order.size(); ++i) {
                int idx = completion_order[i];
                if (idx < 0 || idx >= static_cast<int>(order.size()) || seen[idx])
                    throw std::invalid_argument("grow_ball: completion order is not a permutation");
                seen[idx] = 1;
                permuted[i] = order[idx];
            }
            order = std::move(permuted);
        }
        for (int v : order) grower.complete_link(v);
        grower.close_all_stubs();
        snapshots.push_back(grower.all_cell_ids());
    }
    GrownBall ball = grower.finish(center, radius, std::move(snapshots));
    ValidationResult check = validate(ball.complex);
    if (!check.valid) throw std::logic_error("grow_ball: invalid complex: " + check.problem);
    return ball;
}

CellComplex ball_at_radius(const GrownBall& ball, int radius) {
    if (radius < 0 || radius > ball.radius)
        throw std::invalid_argument("ball_at_radius: radius out of range");
    const auto& keep = ball.radius_cells[radius];
    std::set<int> keep_set(keep.begin(), keep.end());
    CellComplex out;
    for (int d = 0; d <= ball.complex.dim(); ++d) {
        for (int id : ball.complex.cells_of_dim(d)) {
            if (keep_set.count(id)) out.add_cell(ball.complex.cell(id));
        }
    }
    return out;
}

std::vector<TowerRow> aut_tower(const GrownBall& ball) {
    std::vector<TowerRow> rows;
    for (int k = 0; k <= ball.radius; ++k) {
        CellComplex sub = ball_at_radius(ball, k);
        std::vector<int> cell_ids;
        ColoredGraph graph = to_colored_graph(sub, &cell_ids);
        PermGroup aut = automorphism_group(graph);
        TowerRow row;
        row.radius = k;
        row.order = aut.order();
        if (k >= 1) {
            std::set<int> prev_set(ball.radius_cells[k - 1].begin(),
                                   ball.radius_cells[k - 1].end());
            std::vector<int> sub_nodes;
            for (std::size_t i = 0; i < cell_ids.size(); ++i) {
                if (prev_set.count(cell_ids[i])) sub_nodes.push_back(static_cast<int>(i));
            }
            KernelImage ki = restriction_kernel_image(aut, sub_nodes);
            row.kernel_order = ki.kernel.order();
            row.image_order = ki.image_order;
            // the restriction lands inside the smaller ball's group
            if (!row.image_order->divides(rows.back().order))
                throw std::logic_error("aut_tower: restriction image escapes the smaller group");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TowerRow> aut_tower(int m, int n, int r, int max_radius, const GrowLimits& limits) {
    GrownBall ball = grow_ball(m, n, r, max_radius, limits);
    return aut_tower(ball);
}

Verdict check_tower_divisibility(const LawData& law, std::span<const TowerRow> rows) {
    for (const auto& row : rows) {
        Verdict v = admissible_vertex_covolume(law, Rat(BigUint(1), row.order.value()));
        if (!v.admissible) return v;
        if (row.kernel_order) {
            for (const auto& [p, e] : row.kernel_order->factors()) {
                if (!law.find(p)) return Verdict::violation("(a)", p);
            }
        }
    }
    return Verdict::ok();
}

}  // namespace covolat
