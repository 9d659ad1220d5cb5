#include "covolat/aut_search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace covolat {

namespace {

// Ordered partition of 0..n-1. Cells live at stable slots in `members`;
// `order` lists the slots in partition order.
struct Partition {
    std::vector<std::vector<int>> members;  // per slot, sorted
    std::vector<int> order;                 // slot ids in partition order
    std::vector<int> cell_of;               // vertex -> slot id

    static Partition initial(const ColoredGraph& g) {
        Partition p;
        p.cell_of.assign(g.n, -1);
        int max_color = -1;
        for (int c : g.color) max_color = std::max(max_color, c);
        std::vector<std::vector<int>> by_color(max_color + 1);
        for (int v = 0; v < g.n; ++v) by_color[g.color[v]].push_back(v);
        for (auto& cell : by_color) {
            if (cell.empty()) continue;
            int slot = static_cast<int>(p.members.size());
            for (int v : cell) p.cell_of[v] = slot;
            p.members.push_back(std::move(cell));
            p.order.push_back(slot);
        }
        return p;
    }

    int order_pos(int slot) const {
        auto it = std::find(order.begin(), order.end(), slot);
        return static_cast<int>(it - order.begin());
    }

    bool discrete() const {
        for (int slot : order) {
            if (members[slot].size() > 1) return false;
        }
        return true;
    }

    std::vector<int> size_sequence() const {
        std::vector<int> out;
        out.reserve(order.size());
        for (int slot : order) out.push_back(static_cast<int>(members[slot].size()));
        return out;
    }

    std::vector<int> leaf_order() const {
        std::vector<int> out;
        out.reserve(order.size());
        for (int slot : order) out.push_back(members[slot][0]);
        return out;
    }
};

class AutSearch {
public:
    // stop(gen) returning true aborts the search early.
    AutSearch(const ColoredGraph& g, std::function<bool(const Perm&)> stop = nullptr)
        : g_(g), stop_(std::move(stop)) {}

    std::vector<Perm> run() {
        if (g_.n == 0) return {};
        Partition root = Partition::initial(g_);
        std::deque<std::vector<int>> work;
        for (int slot : root.order) work.push_back(root.members[slot]);
        refine(root, std::move(work));
        std::vector<int> prefix;
        descend(root, 0, prefix);
        return gens_;
    }

    bool stopped() const { return stopped_; }

private:
    const ColoredGraph& g_;
    std::function<bool(const Perm&)> stop_;
    std::vector<Perm> gens_;
    bool stopped_ = false;

    bool have_leaf_ = false;
    std::vector<int> ref_leaf_;
    std::vector<std::vector<int>> path_invariant_;  // per depth on the first path

    // Splits cells against splitter sets until equitable.
    void refine(Partition& p, std::deque<std::vector<int>> work) const {
        std::vector<int> cnt(g_.n, 0);
        std::vector<int> touched;
        while (!work.empty()) {
            std::vector<int> splitter = std::move(work.front());
            work.pop_front();
            touched.clear();
            for (int u : splitter) {
                for (int w : g_.adj[u]) {
                    if (cnt[w]++ == 0) touched.push_back(w);
                }
            }
            // cells with at least one counted member, in partition order
            std::vector<int> affected;
            for (int w : touched) {
                int slot = p.cell_of[w];
                if (std::find(affected.begin(), affected.end(), slot) == affected.end())
                    affected.push_back(slot);
            }
            std::sort(affected.begin(), affected.end(),
                      [&](int a, int b) { return p.order_pos(a) < p.order_pos(b); });
            for (int slot : affected) {
                auto& cell = p.members[slot];
                if (cell.size() == 1) continue;
                std::map<int, std::vector<int>> groups;  // count -> members, ascending count
                for (int v : cell) groups[cnt[v]].push_back(v);
                if (groups.size() == 1) continue;
                int pos = p.order_pos(slot);
                auto it = groups.begin();
                cell = it->second;
                work.push_back(cell);
                ++it;
                int insert_at = pos + 1;
                for (; it != groups.end(); ++it) {
                    int fresh = static_cast<int>(p.members.size());
                    for (int v : it->second) p.cell_of[v] = fresh;
                    p.members.push_back(it->second);
                    p.order.insert(p.order.begin() + insert_at, fresh);
                    ++insert_at;
                    work.push_back(it->second);
                }
            }
            for (int w : touched) cnt[w] = 0;
        }
    }

    void individualize(Partition& p, int v) const {
        int slot = p.cell_of[v];
        auto& cell = p.members[slot];
        cell.erase(std::find(cell.begin(), cell.end(), v));
        int fresh = static_cast<int>(p.members.size());
        p.members.push_back({v});  // invalidates `cell`
        p.cell_of[v] = fresh;
        int pos = p.order_pos(slot);
        p.order.insert(p.order.begin() + pos, fresh);  // singleton first
        std::deque<std::vector<int>> work;
        work.push_back({v});
        work.push_back(p.members[slot]);
        refine(p, std::move(work));
    }

    int target_cell(const Partition& p) const {
        int best_slot = -1;
        std::size_t best_size = 1;
        for (int slot : p.order) {
            if (p.members[slot].size() > best_size) {
                best_size = p.members[slot].size();
                best_slot = slot;
            }
        }
        return best_slot;
    }

    void handle_leaf(const Partition& p) {
        std::vector<int> leaf = p.leaf_order();
        if (!have_leaf_) {
            have_leaf_ = true;
            ref_leaf_ = std::move(leaf);
            return;
        }
        Perm cand;
        cand.img.assign(g_.n, -1);
        for (std::size_t i = 0; i < leaf.size(); ++i) cand.img[ref_leaf_[i]] = leaf[i];
        if (cand.is_identity()) return;
        // explicit verification; the invariants make failures rare
        for (int v = 0; v < g_.n; ++v) {
            if (g_.color[v] != g_.color[cand(v)]) return;
        }
        for (int v = 0; v < g_.n; ++v) {
            for (int w : g_.adj[v]) {
                if (!g_.has_edge(cand(v), cand(w))) return;
            }
        }
        if (std::find(gens_.begin(), gens_.end(), cand) == gens_.end()) {
            gens_.push_back(cand);
            if (stop_ && stop_(gens_.back())) stopped_ = true;
        }
    }

    // Orbit partition of the discovered generators fixing `prefix` pointwise.
    std::vector<int> orbit_roots(const std::vector<int>& prefix) const {
        std::vector<int> parent(g_.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto& gen : gens_) {
            bool fixes = true;
            for (int q : prefix) {
                if (gen(q) != q) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            for (int x = 0; x < g_.n; ++x) {
                int a = find(x), b = find(gen(x));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<int> roots(g_.n);
        for (int x = 0; x < g_.n; ++x) roots[x] = find(x);
        return roots;
    }

    void descend(const Partition& p, std::size_t depth, std::vector<int>& prefix) {
        if (stopped_) return;
        std::vector<int> inv = p.size_sequence();
        if (depth < path_invariant_.size()) {
            if (inv != path_invariant_[depth]) return;  // cannot match the first path
        } else if (!have_leaf_) {
            path_invariant_.push_back(inv);
        } else {
            return;  // deeper than the first path; unreachable when invariants match
        }
        if (p.discrete()) {
            handle_leaf(p);
            return;
        }
        int slot = target_cell(p);
        std::vector<int> candidates = p.members[slot];
        std::vector<int> tried;
        std::size_t gens_seen = gens_.size();
        std::vector<int> roots = orbit_roots(prefix);
        for (int v : candidates) {
            if (stopped_) return;
            if (gens_.size() != gens_seen) {
                roots = orbit_roots(prefix);
                gens_seen = gens_.size();
            }
            bool redundant = false;
            for (int t : tried) {
                if (roots[t] == roots[v]) {
                    redundant = true;
                    break;
                }
            }
            tried.push_back(v);
            if (redundant) continue;
            Partition child = p;
            individualize(child, v);
            prefix.push_back(v);
            descend(child, depth + 1, prefix);
            prefix.pop_back();
        }
    }
};

}  // namespace

PermGroup automorphism_group(const ColoredGraph& g) {
    AutSearch search(g);
    return PermGroup(g.n, search.run());
}

PermGroup pointwise_fixator(const ColoredGraph& g, std::span<const int> S) {
    ColoredGraph h = g;
    std::vector<int> fixed(S.begin(), S.end());
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    for (int v : fixed) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("pointwise_fixator: unknown vertex");
        h.color[v] = static_cast<int>(h.color_key.size());
        h.color_key.push_back("fix:" + std::to_string(v));
    }
    AutSearch search(h);
    return PermGroup(g.n, search.run());
}

bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    // color histograms keyed by semantic color name
    auto histogram = [](const ColoredGraph& g) {
        std::map<std::string, int> h;
        for (int v = 0; v < g.n; ++v) ++h[g.color_key[g.color[v]]];
        return h;
    };
    if (histogram(a) != histogram(b)) return false;
    if (a.n == 0) return true;
    if (!a.is_connected() || !b.is_connected())
        throw std::invalid_argument("is_isomorphic: graphs must be connected");
    int offset = 0;
    ColoredGraph u = ColoredGraph::disjoint_union(a, b, &offset);
    AutSearch search(u, [offset](const Perm& gen) {
        for (int v = 0; v < offset; ++v) {
            if (gen(v) >= offset) return true;
        }
        return false;
    });
    search.run();
    return search.stopped();
}

PermGroup graph_automorphisms(const Graph& g, bool type_preserving) {
    return automorphism_group(g.to_colored(type_preserving));
}

PermGroup graph_pointwise_fixator(const Graph& g, std::span<const int> vertex_ids,
                                  bool type_preserving) {
    std::vector<int> idx;
    idx.reserve(vertex_ids.size());
    for (int v : vertex_ids) idx.push_back(g.vertex_index(v));
    return pointwise_fixator(g.to_colored(type_preserving), idx);
}

PermGroup type_preserving_subgroup(const Graph& g) { return graph_automorphisms(g, true); }

std::vector<std::pair<int, int>> edge_orbit_reps(const Graph& g, const PermGroup& G) {
    const auto& edges = g.edges();
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        index[{g.vertex_index(edges[i].first), g.vertex_index(edges[i].second)}] = i;
    }
    std::vector<std::size_t> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& gen : G.generators()) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int a = gen(g.vertex_index(edges[i].first));
            int b = gen(g.vertex_index(edges[i].second));
            if (a > b) std::swap(a, b);
            auto it = index.find({a, b});
            if (it == index.end())
                throw std::invalid_argument("edge_orbit_reps: group does not act on the graph");
            std::size_t x = find(i), y = find(it->second);
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
    }
    std::vector<std::pair<int, int>> reps;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (find(i) == i) reps.push_back(edges[i]);
    }
    return reps;
}

bool is_edge_transitive(const Graph& g, const PermGroup& G) {
    if (g.edge_count() == 0) return true;
    return edge_orbit_reps(g, G).size() == 1;
}

KernelImage restriction_kernel_image(const PermGroup& G, std::span<const int> sub_points) {
    if (!G.set_invariant(sub_points))
        throw std::invalid_argument("restriction_kernel_image: point set is not invariant");
    PermGroup kernel = G.pointwise_stabilizer(sub_points);
    PermGroup image = G.restrict_to(sub_points);
    FactoredNat image_order = image.order();
    if (kernel.order().times(image_order) != G.order())
        throw std::logic_error("restriction_kernel_image: |G| != |K|·|I|");
    return {std::move(kernel), std::move(image_order)};
}

}  // namespace covolat
