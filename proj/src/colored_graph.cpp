#include "covolat/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace covolat {

void ColoredGraph::add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("ColoredGraph: loop");
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("ColoredGraph: edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
}

void ColoredGraph::finalize() {
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("ColoredGraph: multi-edge");
    }
}

std::size_t ColoredGraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& row : adj) deg_sum += row.size();
    return deg_sum / 2;
}

bool ColoredGraph::has_edge(int a, int b) const {
    const auto& row = adj[a];
    return std::binary_search(row.begin(), row.end(), b);
}

ColoredGraph ColoredGraph::disjoint_union(const ColoredGraph& a, const ColoredGraph& b, int* offset_out) {
    ColoredGraph u = a;
    std::map<std::string, int> key_to_id;
    for (int c = 0; c < static_cast<int>(u.color_key.size()); ++c) key_to_id[u.color_key[c]] = c;
    std::vector<int> remap(b.color_key.size());
    for (std::size_t c = 0; c < b.color_key.size(); ++c) {
        auto it = key_to_id.find(b.color_key[c]);
        if (it != key_to_id.end()) {
            remap[c] = it->second;
        } else {
            remap[c] = static_cast<int>(u.color_key.size());
            u.color_key.push_back(b.color_key[c]);
            key_to_id[b.color_key[c]] = remap[c];
        }
    }
    int offset = u.n;
    for (int v = 0; v < b.n; ++v) u.add_vertex(remap[b.color[v]]);
    for (int v = 0; v < b.n; ++v) {
        for (int w : b.adj[v]) {
            if (v < w) u.add_edge(v + offset, w + offset);
        }
    }
    u.finalize();
    if (offset_out) *offset_out = offset;
    return u;
}

bool ColoredGraph::is_connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace covolat
