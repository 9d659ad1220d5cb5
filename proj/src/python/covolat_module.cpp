// Python bindings for the main operations: link construction, automorphism
// and fixator orders, law derivation and admissibility checks, quotient
// covolumes, and ball automorphism towers. Exact values cross the boundary
// as Python ints (arbitrary precision) or rational strings "a/b".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covolat/aut_search.hpp"
#include "covolat/ball_grower.hpp"
#include "covolat/covolume.hpp"
#include "covolat/json_io.hpp"
#include "covolat/law.hpp"
#include "covolat/links.hpp"

namespace py = pybind11;
using namespace covolat;

namespace {

py::int_ to_py_int(const BigUint& v) {
    // via decimal string, so arbitrary precision survives
    return py::module_::import("builtins").attr("int")(py::str(v.to_string())).cast<py::int_>();
}

py::dict law_to_dict(const LawData& law) {
    py::dict out;
    py::list primes;
    for (const auto& e : law.entries) {
        py::dict je;
        je["p"] = e.p;
        je["alpha"] = e.alpha;
        je["alpha_prime"] = e.alpha_prime;
        primes.append(je);
    }
    out["primes"] = primes;
    return out;
}

LawData law_from_dict(const py::dict& d) {
    LawData law;
    for (const auto& item : d["primes"].cast<py::list>()) {
        py::dict je = item.cast<py::dict>();
        law.entries.push_back({je["p"].cast<std::uint64_t>(), je["alpha"].cast<std::uint32_t>(),
                               je["alpha_prime"].cast<std::uint32_t>()});
    }
    return law;
}

py::dict verdict_to_dict(const Verdict& v) {
    py::dict out;
    out["admissible"] = v.admissible;
    if (v.violated_rule) out["violated_rule"] = *v.violated_rule;
    if (v.witness_prime) out["witness_prime"] = *v.witness_prime;
    return out;
}

QuotientData quotient_from_obj(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return quotient_from_json(obj.cast<std::string>());
    return quotient_from_json(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(covolat, m) {
    m.doc() = "exact covolume restrictions for lattices acting on polygonal complexes";

    m.def("factor", [](std::uint64_t n) {
        py::dict out;
        FactoredNat f = factor(n);
        for (const auto& [p, e] : f.factors()) out[py::int_(p)] = e;
        return out;
    });
    m.def("is_m_number", [](std::uint64_t b, std::uint64_t m) { return is_m_number(b, m); });
    m.def("sum_reciprocals", [](const std::vector<std::uint64_t>& orders) {
        return sum_reciprocals(orders).to_string();
    });

    py::class_<Graph>(m, "Graph")
        .def_static("complete_bipartite", &complete_bipartite)
        .def_static("petersen", &petersen)
        .def_static("projective_plane", &projective_plane_incidence)
        .def_static("from_json", &graph_from_json)
        .def("to_json", &graph_to_json)
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("check_generalized_polygon",
             [](const Graph& g, int m) { return generalized_polygon_load(g, m); });

    m.def(
        "aut_order",
        [](const Graph& g, bool type_preserving) {
            return to_py_int(graph_automorphisms(g, type_preserving).order_value());
        },
        py::arg("graph"), py::arg("type_preserving") = false);
    m.def(
        "edge_fixator_order",
        [](const Graph& g, int a, int b, bool type_preserving) {
            std::vector<int> endpoints = {a, b};
            return to_py_int(graph_pointwise_fixator(g, endpoints, type_preserving).order_value());
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("type_preserving") = false);

    m.def("law_from_links", [](const std::vector<Graph>& graphs) {
        std::vector<LinkInput> inputs(graphs.begin(), graphs.end());
        return law_to_dict(law_from_links(inputs));
    });
    m.def("register_link",
          [](const std::string& name, std::uint64_t aut_order, std::uint64_t fixator_order) {
              RegisteredLink link = register_link(name, factor(aut_order), factor(fixator_order));
              return registered_link_to_json(link);
          });
    m.def("law_from_registered", [](const std::vector<std::string>& links_json) {
        std::vector<LinkInput> inputs;
        for (const auto& text : links_json) inputs.emplace_back(registered_link_from_json(text));
        return law_to_dict(law_from_links(inputs));
    });
    m.def("check_vertex_covolume", [](const py::dict& law, const std::string& covolume) {
        return verdict_to_dict(admissible_vertex_covolume(law_from_dict(law), Rat::parse(covolume)));
    });
    m.def("check_face_covolume", [](const py::dict& law, const std::string& covolume) {
        return verdict_to_dict(admissible_face_covolume(law_from_dict(law), Rat::parse(covolume)));
    });
    m.def("check_bipartite_corollary", [](int m, int n, int r, const std::string& mu) {
        return verdict_to_dict(bipartite_corollary_check(m, n, r, Rat::parse(mu)));
    });
    m.def("check_building_corollary", [](const Graph& L, int r, const std::string& mu) {
        return verdict_to_dict(building_corollary_check(L, r, Rat::parse(mu)));
    });
    m.def("check_tree_m_number", [](std::uint64_t m, const std::string& mu) {
        return verdict_to_dict(tree_m_number_check(m, Rat::parse(mu)));
    });

    m.def("bourdon_lattice",
          [](int m, int n, int r) { return quotient_to_json(bourdon_lattice(m, n, r)); });
    m.def(
        "building_lattice",
        [](const Graph& L, int r) { return quotient_to_json(building_lattice(L, r)); },
        py::arg("link"), py::arg("r"));
    m.def("s_covolume", [](const py::object& quotient, int dim) {
        return s_covolume(quotient_from_obj(quotient), dim).to_string();
    });
    m.def("c_of_x",
          [](const py::object& quotient) { return c_of_X(quotient_from_obj(quotient)).to_string(); });

    m.def(
        "grow_ball",
        [](int m, int n, int r, int radius) {
            GrownBall ball = grow_ball(m, n, r, radius);
            py::dict out;
            out["vertices"] = ball.complex.cell_count(0);
            out["edges"] = ball.complex.cell_count(1);
            out["faces"] = ball.complex.cell_count(2);
            out["boundary_vertices"] = ball.boundary_vertices.size();
            out["complex"] = complex_to_json(ball.complex);
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("r"), py::arg("radius"));
    m.def(
        "aut_tower",
        [](int m, int n, int r, int radius) {
            py::list out;
            for (const auto& row : aut_tower(m, n, r, radius)) {
                py::dict jr;
                jr["radius"] = row.radius;
                jr["order"] = to_py_int(row.order.value());
                jr["kernel"] =
                    row.kernel_order ? py::object(to_py_int(row.kernel_order->value())) : py::none();
                jr["image"] =
                    row.image_order ? py::object(to_py_int(row.image_order->value())) : py::none();
                out.append(jr);
            }
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("r"), py::arg("radius"));
}
