#include "covolat/links.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace covolat {

Graph complete_bipartite(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("complete_bipartite: sides must be >= 2");
    std::vector<int> vertices(m + n);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> types;
    for (int i = 0; i < m; ++i) types[i] = "left";
    for (int j = 0; j < n; ++j) types[m + j] = "right";
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    }
    return Graph(std::move(vertices), std::move(edges), std::move(types));
}

Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);
    }
    std::vector<int> vertices(pairs.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            bool disjoint = pairs[a].first != pairs[b].first && pairs[a].first != pairs[b].second &&
                            pairs[a].second != pairs[b].first && pairs[a].second != pairs[b].second;
            if (disjoint) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return Graph(std::move(vertices), std::move(edges));
}

namespace {

// Finite field arithmetic on elements encoded as 0..q-1. Prime fields use
// modular arithmetic; GF(4), GF(8), GF(9) use a polynomial basis with digits
// base p and a fixed irreducible polynomial.
class SmallField {
public:
    explicit SmallField(std::uint64_t q) : q_(static_cast<int>(q)) {
        struct Spec {
            int q, p, deg;
            std::vector<int> reduction;  // x^deg = reduction polynomial, base-p digits
        };
        static const std::vector<Spec> extensions = {
            {4, 2, 2, {1, 1}},   // x^2 = x + 1
            {8, 2, 3, {1, 1, 0}},// x^3 = x + 1
            {9, 3, 2, {2, 0}},   // x^2 = -1 = 2
        };
        if (q <= 13 && is_prime_u64(q)) {
            p_ = q_;
            deg_ = 1;
        } else {
            const Spec* spec = nullptr;
            for (const auto& s : extensions) {
                if (s.q == q_) spec = &s;
            }
            if (!spec) throw std::invalid_argument("projective plane order not supported: " + std::to_string(q));
            p_ = spec->p;
            deg_ = spec->deg;
            reduction_ = spec->reduction;
        }
        build_tables();
    }

    int q() const { return q_; }
    int add(int a, int b) const { return add_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("field inverse of zero");
        return inv_[a];
    }

private:
    int q_, p_ = 0, deg_ = 0;
    std::vector<int> reduction_;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_, inv_;

    std::vector<int> digits(int a) const {
        std::vector<int> d(deg_);
        for (int i = 0; i < deg_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    int encode(const std::vector<int>& d) const {
        int a = 0;
        for (int i = deg_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    }

    void build_tables() {
        add_.assign(q_, std::vector<int>(q_, 0));
        mul_.assign(q_, std::vector<int>(q_, 0));
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                auto da = digits(a), db = digits(b);
                std::vector<int> sum(deg_);
                for (int i = 0; i < deg_; ++i) sum[i] = (da[i] + db[i]) % p_;
                add_[a][b] = encode(sum);
                // polynomial product reduced degree-by-degree
                std::vector<int> prod(2 * deg_ - 1, 0);
                for (int i = 0; i < deg_; ++i) {
                    for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                }
                for (int k = 2 * deg_ - 2; k >= deg_; --k) {
                    int coeff = prod[k];
                    if (coeff == 0) continue;
                    prod[k] = 0;
                    for (int i = 0; i < deg_; ++i)
                        prod[k - deg_ + i] = (prod[k - deg_ + i] + coeff * reduction_[i]) % p_;
                }
                prod.resize(deg_);
                mul_[a][b] = encode(prod);
            }
        }
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                if (add_[a][b] == 0) neg_[a] = b;
                if (mul_[a][b] == 1) inv_[a] = b;
            }
        }
    }
};

}  // namespace

bool projective_plane_supported(std::uint64_t q) {
    if (q <= 13 && is_prime_u64(q)) return true;
    return q == 4 || q == 8 || q == 9;
}

Graph projective_plane_incidence(std::uint64_t q) {
    if (!projective_plane_supported(q))
        throw std::invalid_argument("projective plane order not supported: " + std::to_string(q));
    SmallField field(q);
    const int qi = field.q();
    // normalized homogeneous triples, lexicographic
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < qi; ++x) {
        for (int y = 0; y < qi; ++y) {
            for (int z = 0; z < qi; ++z) {
                std::array<int, 3> t{x, y, z};
                int lead = -1;
                for (int i = 0; i < 3; ++i) {
                    if (t[i] != 0) {
                        lead = i;
                        break;
                    }
                }
                if (lead == -1 || t[lead] != 1) continue;
                triples.push_back(t);
            }
        }
    }
    const int count = static_cast<int>(triples.size());  // q^2 + q + 1
    std::vector<int> vertices(2 * count);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::map<int, std::string> types;
    for (int i = 0; i < count; ++i) {
        types[i] = "point";
        types[count + i] = "line";
    }
    std::vector<std::pair<int, int>> edges;
    for (int pi = 0; pi < count; ++pi) {
        for (int li = 0; li < count; ++li) {
            int dot = 0;
            for (int k = 0; k < 3; ++k)
                dot = field.add(dot, field.mul(triples[pi][k], triples[li][k]));
            if (dot == 0) edges.emplace_back(pi, count + li);
        }
    }
    return Graph(std::move(vertices), std::move(edges), std::move(types));
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int start) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue;
    dist[g.vertex_index(start)] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        int dv = dist[g.vertex_index(v)];
        for (int w : g.neighbors(v)) {
            int wi = g.vertex_index(w);
            if (dist[wi] == -1) {
                dist[wi] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

int graph_diameter(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int diameter = 0;
    for (int v : g.vertices()) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d == -1) throw std::invalid_argument("graph_diameter: graph is disconnected");
            diameter = std::max(diameter, d);
        }
    }
    return diameter;
}

std::optional<int> graph_girth(const Graph& g) {
    // BFS from each vertex; a non-tree edge at depth d closes a cycle
    std::optional<int> best;
    for (int start : g.vertices()) {
        std::vector<int> dist(g.vertex_count(), -1);
        std::vector<int> parent(g.vertex_count(), -1);
        std::deque<int> queue;
        int si = g.vertex_index(start);
        dist[si] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            int vi = g.vertex_index(v);
            for (int w : g.neighbors(v)) {
                int wi = g.vertex_index(w);
                if (dist[wi] == -1) {
                    dist[wi] = dist[vi] + 1;
                    parent[wi] = vi;
                    queue.push_back(w);
                } else if (wi != parent[vi]) {
                    int len = dist[vi] + dist[wi] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

Graph generalized_polygon_load(const Graph& g, int m) {
    if (m < 2) throw std::invalid_argument("generalized_polygon_load: m must be >= 2");
    if (!g.is_connected()) throw std::invalid_argument("generalized_polygon_load: graph is disconnected");
    auto sides = g.bipartition();
    if (!sides) throw std::invalid_argument("generalized_polygon_load: graph is not bipartite");
    int diameter = graph_diameter(g);
    if (diameter != m)
        throw std::invalid_argument("generalized_polygon_load: diameter is " + std::to_string(diameter) +
                                    ", expected " + std::to_string(m));
    auto girth = graph_girth(g);
    if (!girth || *girth != 2 * m)
        throw std::invalid_argument("generalized_polygon_load: girth is " +
                                    (girth ? std::to_string(*girth) : std::string("infinite")) +
                                    ", expected " + std::to_string(2 * m));
    if (g.typed()) return g;
    std::map<int, std::string> types;
    for (int v : (*sides)[0]) types[v] = "0";
    for (int v : (*sides)[1]) types[v] = "1";
    return Graph(g.vertices(), g.edges(), std::move(types));
}

RegisteredLink register_link(std::string name, FactoredNat aut_order, FactoredNat fixator_order,
                             std::optional<std::uint64_t> edge_count) {
    if (!fixator_order.divides(aut_order))
        throw std::invalid_argument("register_link: fixator order does not divide automorphism order");
    return RegisteredLink{std::move(name), std::move(aut_order), std::move(fixator_order), edge_count};
}

void LinkRegistry::put(RegisteredLink link) {
    std::unique_lock lock(mutex_);
    for (auto& existing : links_) {
        if (existing.name == link.name) {
            existing = std::move(link);
            return;
        }
    }
    links_.push_back(std::move(link));
}

std::optional<RegisteredLink> LinkRegistry::get(const std::string& name) const {
    std::shared_lock lock(mutex_);
    for (const auto& link : links_) {
        if (link.name == name) return link;
    }
    return std::nullopt;
}

std::vector<std::string> LinkRegistry::names() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    for (const auto& link : links_) out.push_back(link.name);
    return out;
}

}  // namespace covolat
