// covolat — exact covolume restrictions for lattices on polygonal complexes.
//
// Verbs: link, aut, law, covol, ball. Every command writes exactly one JSON
// document to standard output; diagnostics go to standard error. Exit codes:
// 0 success or admissible verdict, 1 well-formed inadmissible verdict,
// 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covolat/aut_search.hpp"
#include "covolat/ball_grower.hpp"
#include "covolat/covolume.hpp"
#include "covolat/json_io.hpp"
#include "covolat/law.hpp"
#include "covolat/links.hpp"

namespace {

using covolat::Rat;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void emit(const std::string& json_doc) { std::cout << json_doc << "\n"; }

void emit_rational(const Rat& value) { emit(nlohmann::ordered_json(value.to_string()).dump()); }

int run(int argc, char** argv) {
    CLI::App app{"exact covolume restrictions for lattices acting on polygonal complexes"};
    app.require_subcommand(1);
    std::uint64_t cap = covolat::GrowLimits{}.size_cap;
    std::string format = "json";
    app.add_option("--cap", cap, "ball size cap (guards mn·r^radius)");
    app.add_option("--format", format, "output format (json)")->check(CLI::IsMember({"json"}));

    int exit_code = 0;

    // ---- link ----------------------------------------------------------
    auto* link = app.add_subcommand("link", "construct or register link graphs");
    link->require_subcommand(1);

    auto* link_make = link->add_subcommand("make", "construct a link graph");
    std::string family;
    int mk_m = 0, mk_n = 0;
    std::uint64_t mk_q = 0;
    link_make->add_option("--family", family, "bipartite | petersen | pg2")->required();
    link_make->add_option("--m", mk_m, "left side size");
    link_make->add_option("--n", mk_n, "right side size");
    link_make->add_option("--q", mk_q, "projective plane order");
    link_make->callback([&] {
        covolat::Graph g;
        if (family == "bipartite") {
            g = covolat::complete_bipartite(mk_m, mk_n);
        } else if (family == "petersen") {
            g = covolat::petersen();
        } else if (family == "pg2") {
            g = covolat::projective_plane_incidence(mk_q);
        } else {
            throw std::invalid_argument("unknown family: " + family);
        }
        emit(covolat::graph_to_json(g));
    });

    auto* link_register = link->add_subcommand("register", "record link order data");
    std::string reg_name, reg_aut, reg_fix;
    std::optional<std::uint64_t> reg_edges;
    std::uint64_t reg_edges_raw = 0;
    link_register->add_option("--name", reg_name)->required();
    link_register->add_option("--aut-order", reg_aut, "integer or factored string")->required();
    link_register->add_option("--fixator-order", reg_fix, "integer or factored string")->required();
    auto* edges_opt = link_register->add_option("--edges", reg_edges_raw, "edge count");
    link_register->callback([&] {
        auto parse_order = [](const std::string& s) {
            if (s.find_first_not_of("0123456789") == std::string::npos)
                return covolat::factor_big(covolat::BigUint::from_decimal(s));
            return covolat::FactoredNat::parse(s);
        };
        if (edges_opt->count() > 0) reg_edges = reg_edges_raw;
        covolat::RegisteredLink rec =
            covolat::register_link(reg_name, parse_order(reg_aut), parse_order(reg_fix), reg_edges);
        emit(covolat::registered_link_to_json(rec));
    });

    // ---- aut -----------------------------------------------------------
    auto* aut = app.add_subcommand("aut", "automorphism group of a graph");
    std::string aut_graph, aut_fix;
    bool aut_tp = false;
    aut->add_option("--graph", aut_graph, "graph file (JSON), - for stdin")->required();
    aut->add_flag("--type-preserving", aut_tp, "restrict to the type-preserving subgroup");
    aut->add_option("--fix", aut_fix, "comma-separated vertex ids to fix pointwise");
    aut->callback([&] {
        covolat::Graph g = covolat::graph_from_json(covolat::read_input(aut_graph));
        covolat::PermGroup group(0);
        if (!aut_fix.empty()) {
            std::vector<int> ids;
            for (const auto& part : split_list(aut_fix)) ids.push_back(std::stoi(part));
            group = covolat::graph_pointwise_fixator(g, ids, aut_tp);
        } else {
            group = covolat::graph_automorphisms(g, aut_tp);
        }
        emit(covolat::perm_group_report(group, g.vertices()));
    });

    // ---- law -----------------------------------------------------------
    auto* law = app.add_subcommand("law", "derive and evaluate divisibility laws");
    law->require_subcommand(1);

    auto* law_derive = law->add_subcommand("derive", "derive the law of a link family");
    std::string derive_links;
    law_derive->add_option("--links", derive_links, "comma-separated link files")->required();
    law_derive->callback([&] {
        std::vector<covolat::LinkInput> inputs;
        for (const auto& path : split_list(derive_links)) {
            std::string text = covolat::read_input(path);
            if (covolat::looks_like_registered_link(text))
                inputs.emplace_back(covolat::registered_link_from_json(text));
            else
                inputs.emplace_back(covolat::graph_from_json(text));
        }
        emit(covolat::law_to_json(covolat::law_from_links(inputs)));
    });

    auto* law_check = law->add_subcommand("check", "evaluate a covolume against a law");
    std::string check_law, check_covolume;
    bool check_face = false;
    law_check->add_option("--law", check_law, "law file, - for stdin")->required();
    law_check->add_option("--covolume", check_covolume, "rational a/b")->required();
    law_check->add_flag("--face", check_face, "use the face-covolume rules");
    law_check->callback([&] {
        covolat::LawData data = covolat::law_from_json(covolat::read_input(check_law));
        Rat x = Rat::parse(check_covolume);
        covolat::Verdict v = check_face ? covolat::admissible_face_covolume(data, x)
                                        : covolat::admissible_vertex_covolume(data, x);
        emit(covolat::verdict_to_json(v));
        if (!v.admissible) exit_code = 1;
    });

    // ---- covol ---------------------------------------------------------
    auto* covol = app.add_subcommand("covol", "covolumes from quotient stabiliser data");
    covol->require_subcommand(0, 1);
    std::string covol_quotient;
    int covol_dim = 0;
    covol->add_option("--quotient", covol_quotient, "quotient file, - for stdin");
    covol->add_option("--dim", covol_dim, "0 (vertex) or 2 (face)")->check(CLI::IsMember({0, 2}));
    auto* covol_canonical = covol->add_subcommand("canonical", "canonical lattice quotient data");
    std::string can_family, can_link, can_orders;
    int can_m = 0, can_n = 0, can_r = 0;
    covol_canonical->add_option("--family", can_family, "bourdon | building")->required();
    covol_canonical->add_option("--m", can_m);
    covol_canonical->add_option("--n", can_n);
    covol_canonical->add_option("--r", can_r);
    covol_canonical->add_option("--link", can_link, "link graph file (building)");
    covol_canonical->add_option("--orders", can_orders, "B,P1,P2,G (building, optional)");
    covol_canonical->callback([&] {
        covolat::QuotientData q;
        if (can_family == "bourdon") {
            q = covolat::bourdon_lattice(can_m, can_n, can_r);
        } else if (can_family == "building") {
            covolat::Graph L = covolat::graph_from_json(covolat::read_input(can_link));
            std::optional<covolat::BuildingOrders> orders;
            if (!can_orders.empty()) {
                auto parts = split_list(can_orders);
                if (parts.size() != 4)
                    throw std::invalid_argument("--orders expects B,P1,P2,G");
                orders = covolat::BuildingOrders{std::stoull(parts[0]), std::stoull(parts[1]),
                                                 std::stoull(parts[2]), std::stoull(parts[3])};
            }
            q = covolat::building_lattice(L, can_r, orders);
        } else {
            throw std::invalid_argument("unknown family: " + can_family);
        }
        emit(covolat::quotient_to_json(q));
    });

    auto* covol_cx = covol->add_subcommand("cx", "the constant c(X) of a quotient");
    std::string cx_quotient;
    covol_cx->add_option("--quotient", cx_quotient, "quotient file, - for stdin")->required();
    covol_cx->callback([&] {
        covolat::QuotientData q = covolat::quotient_from_json(covolat::read_input(cx_quotient));
        emit_rational(covolat::c_of_X(q));
    });

    covol->callback([&] {
        if (covol_canonical->parsed() || covol_cx->parsed()) return;
        if (covol_quotient.empty()) throw CLI::RequiredError("--quotient");
        covolat::QuotientData q = covolat::quotient_from_json(covolat::read_input(covol_quotient));
        emit_rational(covolat::s_covolume(q, covol_dim));
    });

    // ---- ball ----------------------------------------------------------
    auto* ball = app.add_subcommand("ball", "grow balls and compute automorphism towers");
    ball->require_subcommand(1);

    auto* ball_grow = ball->add_subcommand("grow", "grow a ball of the unique (r, K_{m,n}) complex");
    int bg_m = 0, bg_n = 0, bg_r = 0, bg_radius = 0;
    std::string bg_out;
    ball_grow->add_option("--m", bg_m)->required();
    ball_grow->add_option("--n", bg_n)->required();
    ball_grow->add_option("--r", bg_r)->required();
    ball_grow->add_option("--radius", bg_radius)->required();
    ball_grow->add_option("--out", bg_out, "also write the complex to this file");
    ball_grow->callback([&] {
        covolat::GrowLimits limits;
        limits.size_cap = cap;
        covolat::GrownBall grown = covolat::grow_ball(bg_m, bg_n, bg_r, bg_radius, limits);
        std::string doc = covolat::complex_to_json(grown.complex);
        if (!bg_out.empty()) {
            std::ofstream out(bg_out);
            if (!out) throw std::invalid_argument("cannot write file: " + bg_out);
            out << doc << "\n";
        }
        emit(doc);
    });

    auto* ball_tower = ball->add_subcommand("tower", "ball automorphism tower");
    int bt_m = 0, bt_n = 0, bt_r = 0, bt_radius = 0;
    ball_tower->add_option("--m", bt_m)->required();
    ball_tower->add_option("--n", bt_n)->required();
    ball_tower->add_option("--r", bt_r)->required();
    ball_tower->add_option("--radius", bt_radius)->required();
    ball_tower->callback([&] {
        covolat::GrowLimits limits;
        limits.size_cap = cap;
        emit(covolat::tower_to_json(covolat::aut_tower(bt_m, bt_n, bt_r, bt_radius, limits)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }
    if (format != "json") {
        std::cerr << "unsupported format: " << format << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
