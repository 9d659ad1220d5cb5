#include "covolat/cell_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace covolat {

void CellComplex::add_cell(Cell cell) {
    if (index_.count(cell.id)) throw std::invalid_argument("CellComplex: duplicate cell id");
    if (cell.dim < 0) throw std::invalid_argument("CellComplex: negative dimension");
    dim_ = std::max(dim_, cell.dim);
    index_[cell.id] = cells_.size();
    cells_.push_back(std::move(cell));
}

const Cell& CellComplex::cell(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("CellComplex: unknown cell id");
    return cells_[it->second];
}

std::size_t CellComplex::cell_count(int dim) const {
    std::size_t n = 0;
    for (const auto& c : cells_) {
        if (c.dim == dim) ++n;
    }
    return n;
}

std::vector<int> CellComplex::cells_of_dim(int dim) const {
    std::vector<int> out;
    for (const auto& c : cells_) {
        if (c.dim == dim) out.push_back(c.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> CellComplex::all_cells() const {
    std::vector<int> out;
    for (int d = 0; d <= dim_; ++d) {
        auto layer = cells_of_dim(d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<int> CellComplex::cofaces(int id) const {
    const Cell& base = cell(id);
    std::vector<int> out;
    for (const auto& c : cells_) {
        if (c.dim != base.dim + 1) continue;
        if (std::find(c.faces.begin(), c.faces.end(), id) != c.faces.end()) out.push_back(c.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> CellComplex::edge_endpoints(int edge_id) const {
    const Cell& e = cell(edge_id);
    if (e.dim != 1 || e.faces.size() != 2)
        throw std::invalid_argument("CellComplex: not a well-formed 1-cell");
    int a = e.faces[0], b = e.faces[1];
    return {std::min(a, b), std::max(a, b)};
}

CellComplex::FaceCycle CellComplex::face_cycle(int face_id) const {
    const Cell& f = cell(face_id);
    if (f.dim != 2) throw std::invalid_argument("CellComplex: face_cycle needs a 2-cell");
    if (f.faces.size() < 3) throw std::invalid_argument("CellComplex: 2-cell with fewer than 3 sides");
    // vertex -> incident boundary edges of this face
    std::map<int, std::vector<int>> at_vertex;
    for (int eid : f.faces) {
        auto [a, b] = edge_endpoints(eid);
        at_vertex[a].push_back(eid);
        at_vertex[b].push_back(eid);
    }
    for (const auto& [v, es] : at_vertex) {
        if (es.size() != 2)
            throw std::invalid_argument("CellComplex: 2-cell boundary is not a simple cycle");
    }
    if (at_vertex.size() != f.faces.size())
        throw std::invalid_argument("CellComplex: 2-cell boundary is not a single cycle");
    FaceCycle cyc;
    // deterministic start: lowest vertex, then its lower-id incident edge
    int v0 = at_vertex.begin()->first;
    int e0 = std::min(at_vertex[v0][0], at_vertex[v0][1]);
    int v = v0;
    int e = e0;
    std::set<int> used;
    for (std::size_t i = 0; i < f.faces.size(); ++i) {
        cyc.vertices.push_back(v);
        cyc.edges.push_back(e);
        used.insert(e);
        auto [a, b] = edge_endpoints(e);
        int next_v = (a == v) ? b : a;
        const auto& es = at_vertex[next_v];
        int next_e = (es[0] == e) ? es[1] : es[0];
        v = next_v;
        e = next_e;
    }
    if (v != v0 || used.size() != f.faces.size())
        throw std::invalid_argument("CellComplex: 2-cell boundary is not a single cycle");
    return cyc;
}

ValidationResult validate(const CellComplex& c) {
    auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
    for (int id : c.all_cells()) {
        const Cell& cell = c.cell(id);
        for (int fid : cell.faces) {
            if (!c.has_cell(fid))
                return fail("cell " + std::to_string(id) + ": dangling face reference " + std::to_string(fid));
            if (c.cell(fid).dim != cell.dim - 1)
                return fail("cell " + std::to_string(id) + ": face " + std::to_string(fid) +
                            " is not one dimension lower");
        }
        if (cell.dim == 0 && !cell.faces.empty())
            return fail("cell " + std::to_string(id) + ": 0-cell with boundary");
        if (cell.dim == 1) {
            if (cell.faces.size() != 2 || cell.faces[0] == cell.faces[1])
                return fail("cell " + std::to_string(id) + ": 1-cell needs two distinct endpoints");
        }
        if (cell.dim == 2) {
            std::set<int> uniq(cell.faces.begin(), cell.faces.end());
            if (uniq.size() != cell.faces.size())
                return fail("cell " + std::to_string(id) + ": repeated boundary edge");
            try {
                (void)c.face_cycle(id);
            } catch (const std::exception& e) {
                return fail("cell " + std::to_string(id) + ": " + e.what());
            }
        }
    }
    return {};
}

Graph::Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges,
             std::map<int, std::string> types)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), types_(std::move(types)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("Graph: duplicate vertex");
    for (auto& [a, b] : edges_) {
        if (a == b) throw std::invalid_argument("Graph: loop");
        if (a > b) std::swap(a, b);
        if (!has_vertex(a) || !has_vertex(b)) throw std::invalid_argument("Graph: edge endpoint missing");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: multi-edge");
    if (!types_.empty()) {
        std::set<std::string> classes;
        for (int v : vertices_) {
            auto it = types_.find(v);
            if (it == types_.end()) throw std::invalid_argument("Graph: untyped vertex in typed graph");
            classes.insert(it->second);
        }
        if (types_.size() != vertices_.size())
            throw std::invalid_argument("Graph: type map mentions unknown vertex");
        if (classes.size() != 2) throw std::invalid_argument("Graph: typed graph needs exactly two classes");
        for (const auto& [a, b] : edges_) {
            if (types_.at(a) == types_.at(b))
                throw std::invalid_argument("Graph: edge inside one type class");
        }
    }
    adjacency_.assign(vertices_.size(), {});
    for (const auto& [a, b] : edges_) {
        adjacency_[vertex_index(a)].push_back(b);
        adjacency_[vertex_index(b)].push_back(a);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

int Graph::vertex_index(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw std::invalid_argument("Graph: unknown vertex");
    return static_cast<int>(it - vertices_.begin());
}

std::vector<int> Graph::neighbors(int v) const { return adjacency_[vertex_index(v)]; }

std::vector<std::vector<int>> Graph::sides() const {
    if (!typed()) throw std::invalid_argument("Graph: no type function declared");
    std::map<std::string, std::vector<int>> classes;
    for (int v : vertices_) classes[types_.at(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [name, vs] : classes) out.push_back(std::move(vs));
    return out;
}

ColoredGraph Graph::to_colored(bool use_types) const {
    ColoredGraph g;
    if (use_types && !typed()) throw std::invalid_argument("Graph: no type function declared");
    if (use_types) {
        std::map<std::string, int> color_of;
        for (const auto& [v, type_name] : types_) color_of.emplace(type_name, 0);
        int next_color = 0;
        for (auto& [type_name, c] : color_of) c = next_color++;
        g.color_key.resize(color_of.size());
        for (const auto& [name, c] : color_of) g.color_key[c] = "type:" + name;
        for (int v : vertices_) g.add_vertex(color_of.at(types_.at(v)));
    } else {
        g.color_key = {"vertex"};
        for (std::size_t i = 0; i < vertices_.size(); ++i) g.add_vertex(0);
    }
    for (const auto& [a, b] : edges_) g.add_edge(vertex_index(a), vertex_index(b));
    g.finalize();
    return g;
}

CellComplex Graph::to_cell_complex() const {
    CellComplex c;
    for (int v : vertices_) {
        Cell cell;
        cell.id = v;
        cell.dim = 0;
        auto it = types_.find(v);
        if (it != types_.end()) cell.label = it->second;
        c.add_cell(std::move(cell));
    }
    int next = vertices_.empty() ? 0 : vertices_.back() + 1;
    for (const auto& [a, b] : edges_) {
        Cell cell;
        cell.id = next++;
        cell.dim = 1;
        cell.faces = {a, b};
        c.add_cell(std::move(cell));
    }
    return c;
}

Graph Graph::from_cell_complex(const CellComplex& c) {
    if (c.dim() > 1) throw std::invalid_argument("Graph: complex has dimension above 1");
    std::vector<int> vs = c.cells_of_dim(0);
    std::vector<std::pair<int, int>> es;
    std::map<int, std::string> types;
    bool any_label = false, all_label = true;
    for (int v : vs) {
        const auto& label = c.cell(v).label;
        if (label) {
            types[v] = *label;
            any_label = true;
        } else {
            all_label = false;
        }
    }
    for (int e : c.cells_of_dim(1)) es.push_back(c.edge_endpoints(e));
    if (!any_label || !all_label) types.clear();
    return Graph(std::move(vs), std::move(es), std::move(types));
}

bool Graph::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int w : adjacency_[i]) {
            int j = vertex_index(w);
            if (!seen[j]) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == vertices_.size();
}

std::optional<std::vector<std::vector<int>>> Graph::bipartition() const {
    std::vector<int> side(vertices_.size(), -1);
    for (std::size_t start = 0; start < vertices_.size(); ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::vector<std::size_t> queue = {start};
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            for (int w : adjacency_[i]) {
                std::size_t j = static_cast<std::size_t>(vertex_index(w));
                if (side[j] == -1) {
                    side[j] = 1 - side[i];
                    queue.push_back(j);
                } else if (side[j] == side[i]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<std::vector<int>> classes(2);
    for (std::size_t i = 0; i < vertices_.size(); ++i) classes[side[i]].push_back(vertices_[i]);
    return classes;
}

Graph link(const CellComplex& c, int v) {
    const Cell& vc = c.cell(v);
    if (vc.dim != 0) throw std::invalid_argument("link: not a 0-cell");
    std::vector<int> link_vertices = c.cofaces(v);  // 1-cells at v
    std::set<int> at_v(link_vertices.begin(), link_vertices.end());
    std::vector<std::pair<int, int>> link_edges;
    for (int fid : c.cells_of_dim(2)) {
        const Cell& f = c.cell(fid);
        std::vector<int> corner;
        for (int eid : f.faces) {
            if (at_v.count(eid)) corner.push_back(eid);
        }
        if (corner.empty()) continue;
        if (corner.size() != 2)
            throw std::invalid_argument("link: 2-cell does not meet the vertex in a corner");
        link_edges.emplace_back(corner[0], corner[1]);
    }
    return Graph(std::move(link_vertices), std::move(link_edges));
}

CellComplex ball(const CellComplex& c, int sigma, int radius) {
    if (!c.has_cell(sigma)) throw std::invalid_argument("ball: unknown cell");
    if (radius < 0) throw std::invalid_argument("ball: negative radius");
    int top = c.dim();

    // closure of a set of cell ids
    auto close = [&](std::set<int>& cells) {
        std::vector<int> work(cells.begin(), cells.end());
        while (!work.empty()) {
            int id = work.back();
            work.pop_back();
            for (int fid : c.cell(id).faces) {
                if (cells.insert(fid).second) work.push_back(fid);
            }
        }
    };

    std::set<int> current = {sigma};
    close(current);
    for (int step = 0; step < radius; ++step) {
        // vertices currently in the ball
        std::set<int> verts;
        for (int id : current) {
            if (c.cell(id).dim == 0) verts.insert(id);
        }
        std::set<int> next = current;
        bool grew = false;
        for (int tid : c.cells_of_dim(top)) {
            if (next.count(tid)) continue;
            // a top cell meets the ball iff its closure shares a vertex
            std::set<int> closure = {tid};
            close(closure);
            bool meets = false;
            for (int id : closure) {
                if (c.cell(id).dim == 0 && verts.count(id)) {
                    meets = true;
                    break;
                }
            }
            if (meets) {
                next.insert(closure.begin(), closure.end());
                grew = true;
            }
        }
        current = std::move(next);
        if (!grew) break;  // saturated
    }

    CellComplex out;
    for (int d = 0; d <= top; ++d) {
        for (int id : c.cells_of_dim(d)) {
            if (current.count(id)) out.add_cell(c.cell(id));
        }
    }
    return out;
}

ColoredGraph to_colored_graph(const CellComplex& c, std::vector<int>* cell_ids_out) {
    // color classes keyed by (dimension, label)
    std::map<std::pair<int, std::string>, int> color_of;
    std::vector<int> ids = c.all_cells();
    for (int id : ids) {
        const Cell& cell = c.cell(id);
        std::pair<int, std::string> key{cell.dim, cell.label.value_or("")};
        color_of.emplace(key, 0);
    }
    int next_color = 0;
    for (auto& [key, color] : color_of) color = next_color++;

    ColoredGraph g;
    g.color_key.resize(color_of.size());
    for (const auto& [key, color] : color_of)
        g.color_key[color] = "cell:" + std::to_string(key.first) + ":" + key.second;
    std::map<int, int> node_of;
    for (int id : ids) {
        const Cell& cell = c.cell(id);
        node_of[id] = g.n;
        g.add_vertex(color_of.at({cell.dim, cell.label.value_or("")}));
    }
    for (int id : ids) {
        for (int fid : c.cell(id).faces) g.add_edge(node_of.at(id), node_of.at(fid));
    }
    g.finalize();
    if (cell_ids_out) *cell_ids_out = ids;
    return g;
}

}  // namespace covolat
