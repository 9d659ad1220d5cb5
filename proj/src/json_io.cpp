#include "covolat/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace covolat {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
    return ordered_json::parse(text);  // throws nlohmann parse_error on bad input
}

FactoredNat order_field(const ordered_json& j) {
    if (j.is_number_unsigned()) return factor(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        // bare integers are accepted alongside factored strings
        if (s.find_first_not_of("0123456789") == std::string::npos)
            return factor_big(BigUint::from_decimal(s));
        return FactoredNat::parse(s);
    }
    throw std::invalid_argument("order field must be an integer or a factored string");
}

}  // namespace

std::string complex_to_json(const CellComplex& c) {
    ordered_json out;
    out["dim"] = c.dim();
    out["cells"] = ordered_json::array();
    for (int id : c.all_cells()) {
        const Cell& cell = c.cell(id);
        ordered_json jc;
        jc["id"] = cell.id;
        jc["dim"] = cell.dim;
        jc["faces"] = cell.faces;
        if (cell.label) jc["label"] = *cell.label;
        out["cells"].push_back(std::move(jc));
    }
    return out.dump();
}

CellComplex complex_from_json(const std::string& text) {
    ordered_json j = parse(text);
    CellComplex c;
    if (!j.contains("cells")) throw std::invalid_argument("complex json: missing cells");
    for (const auto& jc : j["cells"]) {
        Cell cell;
        cell.id = jc.at("id").get<int>();
        cell.dim = jc.at("dim").get<int>();
        if (jc.contains("faces")) cell.faces = jc["faces"].get<std::vector<int>>();
        if (jc.contains("label")) cell.label = jc["label"].get<std::string>();
        c.add_cell(std::move(cell));
    }
    return c;
}

std::string graph_to_json(const Graph& g) {
    ordered_json out;
    out["vertices"] = g.vertices();
    out["edges"] = ordered_json::array();
    for (const auto& [a, b] : g.edges()) out["edges"].push_back(ordered_json::array({a, b}));
    if (g.typed()) {
        ordered_json types = ordered_json::object();
        for (const auto& [v, t] : g.types()) types[std::to_string(v)] = t;
        out["types"] = std::move(types);
    }
    return out.dump();
}

Graph graph_from_json(const std::string& text) {
    ordered_json j = parse(text);
    if (j.contains("cells")) return Graph::from_cell_complex(complex_from_json(text));
    std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        edges.emplace_back(je[0].get<int>(), je[1].get<int>());
    }
    std::map<int, std::string> types;
    if (j.contains("types")) {
        for (const auto& [key, value] : j["types"].items())
            types[std::stoi(key)] = value.get<std::string>();
    }
    return Graph(std::move(vertices), std::move(edges), std::move(types));
}

std::string quotient_to_json(const QuotientData& q) {
    ordered_json out;
    out["cells"] = ordered_json::array();
    for (const auto& c : q.cells) {
        ordered_json jc;
        jc["label"] = c.label;
        jc["dim"] = c.dim;
        jc["order"] = c.order;
        out["cells"].push_back(std::move(jc));
    }
    return out.dump();
}

QuotientData quotient_from_json(const std::string& text) {
    ordered_json j = parse(text);
    QuotientData q;
    for (const auto& jc : j.at("cells")) {
        QuotientCell c;
        c.label = jc.at("label").get<std::string>();
        c.dim = jc.at("dim").get<int>();
        c.order = jc.at("order").get<std::uint64_t>();
        q.cells.push_back(std::move(c));
    }
    q.check();
    return q;
}

std::string law_to_json(const LawData& law) {
    ordered_json out;
    out["primes"] = ordered_json::array();
    for (const auto& e : law.entries) {
        ordered_json je;
        je["p"] = e.p;
        je["alpha"] = e.alpha;
        je["alpha_prime"] = e.alpha_prime;
        out["primes"].push_back(std::move(je));
    }
    return out.dump();
}

LawData law_from_json(const std::string& text) {
    ordered_json j = parse(text);
    LawData law;
    for (const auto& je : j.at("primes")) {
        LawEntry e;
        e.p = je.at("p").get<std::uint64_t>();
        e.alpha = je.at("alpha").get<std::uint32_t>();
        e.alpha_prime = je.at("alpha_prime").get<std::uint32_t>();
        law.entries.push_back(e);
    }
    for (std::size_t i = 0; i < law.entries.size(); ++i) {
        const auto& e = law.entries[i];
        if (!is_prime_u64(e.p)) throw std::invalid_argument("law json: non-prime entry");
        if (e.alpha == 0 || e.alpha_prime > e.alpha)
            throw std::invalid_argument("law json: exponents must satisfy 0 <= alpha' <= alpha, alpha >= 1");
        if (i > 0 && law.entries[i - 1].p >= e.p)
            throw std::invalid_argument("law json: primes must be strictly increasing");
    }
    return law;
}

std::string registered_link_to_json(const RegisteredLink& link) {
    ordered_json out;
    out["name"] = link.name;
    out["aut_order"] = link.aut_order.to_string();
    out["fixator_order"] = link.fixator_order.to_string();
    if (link.edge_count) out["edge_count"] = *link.edge_count;
    return out.dump();
}

RegisteredLink registered_link_from_json(const std::string& text) {
    ordered_json j = parse(text);
    std::optional<std::uint64_t> edges;
    if (j.contains("edge_count")) edges = j["edge_count"].get<std::uint64_t>();
    return register_link(j.at("name").get<std::string>(), order_field(j.at("aut_order")),
                         order_field(j.at("fixator_order")), edges);
}

bool looks_like_registered_link(const std::string& text) {
    try {
        ordered_json j = parse(text);
        return j.is_object() && j.contains("aut_order");
    } catch (...) {
        return false;
    }
}

std::string verdict_to_json(const Verdict& v) {
    ordered_json out;
    out["admissible"] = v.admissible;
    if (v.violated_rule) out["violated_rule"] = *v.violated_rule;
    if (v.witness_prime) out["witness_prime"] = *v.witness_prime;
    return out.dump();
}

std::string tower_to_json(const std::vector<TowerRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json jr;
        jr["radius"] = row.radius;
        jr["order"] = row.order.to_string();
        jr["kernel"] = row.kernel_order ? ordered_json(row.kernel_order->to_string())
                                        : ordered_json(nullptr);
        jr["image"] = row.image_order ? ordered_json(row.image_order->to_string())
                                      : ordered_json(nullptr);
        out.push_back(std::move(jr));
    }
    return out.dump();
}

std::string perm_group_report(const PermGroup& group, const std::vector<int>& external_ids) {
    ordered_json out;
    out["order"] = group.order().to_string();
    out["generators"] = ordered_json::array();
    for (const auto& gen : group.generators())
        out["generators"].push_back(gen.cycle_string(external_ids));
    out["orbits"] = ordered_json::array();
    for (const auto& orbit : group.orbits()) {
        ordered_json jo = ordered_json::array();
        for (int v : orbit) jo.push_back(external_ids.empty() ? v : external_ids[v]);
        out["orbits"].push_back(std::move(jo));
    }
    return out.dump();
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace covolat
