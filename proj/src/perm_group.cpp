#include "covolat/perm_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace covolat {

Perm Perm::identity(int degree) {
    Perm p;
    p.img.resize(degree);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (img[i] != i) return false;
    }
    return true;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
    return r;
}

Perm Perm::compose(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(a.img.size());
    for (int i = 0; i < a.degree(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
}

std::string Perm::cycle_string(std::span<const int> external_ids) const {
    std::string out;
    std::vector<char> seen(img.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start] || img[start] == start) continue;
        out += '(';
        int x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) out += ' ';
            first = false;
            out += std::to_string(external_ids.empty() ? x : external_ids[x]);
            x = img[x];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

PermGroup::PermGroup(int degree) : degree_(degree) {}

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::vector<int> base_prefix)
    : degree_(degree) {
    for (auto& g : gens) {
        if (g.degree() != degree) throw std::invalid_argument("PermGroup: degree mismatch");
        if (g.is_identity()) continue;
        if (std::find(input_gens_.begin(), input_gens_.end(), g) == input_gens_.end())
            input_gens_.push_back(std::move(g));
    }
    build(std::move(base_prefix));
}

void PermGroup::append_base_point(int point) {
    base_.push_back(point);
    Level lvl;
    lvl.base = point;
    levels_.push_back(std::move(lvl));
}

void PermGroup::rebuild_orbit(std::size_t li) {
    Level& lvl = levels_[li];
    lvl.orbit.clear();
    lvl.orbit_pos.assign(degree_, -1);
    lvl.rep.clear();
    lvl.rep_inv.clear();
    lvl.orbit.push_back(lvl.base);
    lvl.orbit_pos[lvl.base] = 0;
    lvl.rep.push_back(Perm::identity(degree_));
    lvl.rep_inv.push_back(Perm::identity(degree_));
    for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
        int gamma = lvl.orbit[qi];
        for (int gid : lvl.gen_ids) {
            const Perm& g = strong_[gid];
            int delta = g(gamma);
            if (lvl.orbit_pos[delta] == -1) {
                lvl.orbit_pos[delta] = static_cast<int>(lvl.orbit.size());
                lvl.orbit.push_back(delta);
                lvl.rep.push_back(Perm::compose(g, lvl.rep[qi]));
                lvl.rep_inv.push_back(lvl.rep.back().inverse());
            }
        }
    }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm p, std::size_t from_level) const {
    for (std::size_t li = from_level; li < levels_.size(); ++li) {
        if (p.is_identity()) return {std::move(p), li};
        const Level& lvl = levels_[li];
        int gamma = p(lvl.base);
        int pos = lvl.orbit_pos[gamma];
        if (pos == -1) return {std::move(p), li};
        p = Perm::compose(lvl.rep_inv[pos], p);
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::build(std::vector<int> base_prefix) {
    strong_ = input_gens_;
    base_.clear();
    levels_.clear();

    std::set<int> in_base;
    for (int p : base_prefix) {
        if (p < 0 || p >= degree_) throw std::invalid_argument("PermGroup: base point out of range");
        if (in_base.insert(p).second) append_base_point(p);
    }
    // every strong generator must move some base point
    auto cover = [&](const Perm& g) {
        for (int b : base_) {
            if (g(b) != b) return;
        }
        for (int x = 0; x < degree_; ++x) {
            if (g(x) != x) {
                if (in_base.insert(x).second) append_base_point(x);
                return;
            }
        }
    };
    for (const auto& g : strong_) cover(g);
    if (levels_.empty()) return;  // trivial group

    // initial level generating sets: generators fixing all earlier base points
    for (std::size_t li = 0; li < levels_.size(); ++li) {
        for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
            bool fixes = true;
            for (std::size_t h = 0; h < li; ++h) {
                if (strong_[gi](base_[h]) != base_[h]) {
                    fixes = false;
                    break;
                }
            }
            if (fixes) levels_[li].gen_ids.push_back(static_cast<int>(gi));
        }
        rebuild_orbit(li);
    }

    // verify Schreier generators bottom-up; on failure add the residue as a
    // strong generator at the levels it belongs to and resume there
    std::size_t i = levels_.size();  // 1-based cursor over levels
    while (i >= 1) {
        const std::size_t li = i - 1;
        bool complete = true;
        // lvl may dangle after append_base_point, so `complete` short-circuits
        // the loop condition before the size is read again
        const Level& lvl = levels_[li];
        for (std::size_t qi = 0; complete && qi < lvl.orbit.size(); ++qi) {
            for (int gid : lvl.gen_ids) {
                const Perm& g = strong_[gid];
                int gamma = lvl.orbit[qi];
                int dpos = lvl.orbit_pos[g(gamma)];
                Perm sg = Perm::compose(lvl.rep_inv[dpos], Perm::compose(g, lvl.rep[qi]));
                if (sg.is_identity()) continue;
                auto [res, stop] = sift(std::move(sg), li + 1);
                if (res.is_identity()) continue;
                // new strong generator
                std::size_t j = stop;  // first level that cannot strip it
                if (j >= levels_.size()) {
                    // fixes all existing base points: extend the base
                    int moved = -1;
                    for (int x = 0; x < degree_; ++x) {
                        if (res(x) != x) {
                            moved = x;
                            break;
                        }
                    }
                    if (moved == -1) continue;  // defensive; res != id rules this out
                    append_base_point(moved);
                    j = levels_.size() - 1;
                }
                int new_id = static_cast<int>(strong_.size());
                strong_.push_back(std::move(res));
                for (std::size_t h = li + 1; h <= j; ++h) {
                    levels_[h].gen_ids.push_back(new_id);
                    rebuild_orbit(h);
                }
                i = j + 1;
                complete = false;
                break;
            }
        }
        if (complete) --i;
    }
}

FactoredNat PermGroup::order() const {
    FactoredNat total;
    for (const auto& lvl : levels_)
        total = total.times(factor(static_cast<std::uint64_t>(lvl.orbit.size())));
    return total;
}

BigUint PermGroup::order_value() const { return order().value(); }

bool PermGroup::is_trivial() const {
    for (const auto& lvl : levels_) {
        if (lvl.orbit.size() > 1) return false;
    }
    return true;
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [res, stop] = sift(p, 0);
    (void)stop;
    return res.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rank(degree_, 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
    };
    for (const auto& g : input_gens_) {
        for (int x = 0; x < degree_; ++x) unite(x, g(x));
    }
    std::map<int, std::vector<int>> buckets;
    for (int x = 0; x < degree_; ++x) buckets[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : buckets) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
    std::vector<int> prefix(points.begin(), points.end());
    std::sort(prefix.begin(), prefix.end());
    prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
    PermGroup chained(degree_, input_gens_, prefix);
    std::vector<Perm> fixing;
    for (const auto& g : chained.strong_) {
        bool fixes = true;
        for (int p : prefix) {
            if (g(p) != p) {
                fixes = false;
                break;
            }
        }
        if (fixes) fixing.push_back(g);
    }
    return PermGroup(degree_, std::move(fixing));
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
    std::set<std::vector<int>> seen;
    std::vector<Perm> out = {Perm::identity(degree_)};
    seen.insert(out[0].img);
    for (std::size_t qi = 0; qi < out.size(); ++qi) {
        Perm cur = out[qi];
        for (const auto& g : input_gens_) {
            Perm next = Perm::compose(g, cur);
            if (seen.insert(next.img).second) {
                if (out.size() >= cap) throw std::length_error("PermGroup: enumeration cap exceeded");
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

bool PermGroup::set_invariant(std::span<const int> points) const {
    std::vector<char> inside(degree_, 0);
    for (int p : points) inside[p] = 1;
    for (const auto& g : input_gens_) {
        for (int p : points) {
            if (!inside[g(p)]) return false;
        }
    }
    return true;
}

PermGroup PermGroup::restrict_to(std::span<const int> points) const {
    if (!set_invariant(points)) throw std::invalid_argument("PermGroup: set is not invariant");
    std::vector<int> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> index(degree_, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
    std::vector<Perm> rgens;
    for (const auto& g : input_gens_) {
        Perm r;
        r.img.resize(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i) r.img[i] = index[g(sorted[i])];
        rgens.push_back(std::move(r));
    }
    return PermGroup(static_cast<int>(sorted.size()), std::move(rgens));
}

}  // namespace covolat
