#include <doctest.h>

#include <string>

#include <json.hpp>

#include "covolat/json_io.hpp"
#include "covolat/links.hpp"
#include "support/test_helpers.hpp"

using namespace covolat;
namespace ts = covolat::testsupport;
using nlohmann::json;

TEST_SUITE("cli") {

TEST_CASE("link make emits graph documents") {
    int code = -1;
    std::string out = ts::run_cli("link make --family pg2 --q 2", &code);
    CHECK(code == 0);
    Graph g = graph_from_json(out);
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 21);

    out = ts::run_cli("link make --family bipartite --m 3 --n 2", &code);
    CHECK(code == 0);
    CHECK(graph_from_json(out).vertex_count() == 5);
    CHECK(graph_from_json(out).edge_count() == 6);

    out = ts::run_cli("link make --family petersen", &code);
    CHECK(code == 0);
    CHECK(graph_from_json(out).edge_count() == 15);

    ts::run_cli("link make --family nonsense", &code);
    CHECK(code == 2);
}

TEST_CASE("link register validates divisibility") {
    int code = -1;
    std::string out =
        ts::run_cli("link register --name 120-cell --aut-order 14400 --fixator-order 1", &code);
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["aut_order"] == "2^6·3^2·5^2");
    CHECK_FALSE(j.contains("edge_count"));
    out = ts::run_cli("link register --name A2-q2 --aut-order 168 --fixator-order 8 --edges 21",
                      &code);
    CHECK(code == 0);
    CHECK(json::parse(out)["edge_count"] == 21);
    // factored strings are accepted as orders
    out = ts::run_cli("link register --name F --aut-order 2^3·3·7 --fixator-order 2^3",
                      &code);
    CHECK(code == 0);
    ts::run_cli("link register --name X --aut-order 6 --fixator-order 4", &code);
    CHECK(code == 2);
}

TEST_CASE("aut reports order, generators and orbits") {
    int code = -1;
    std::string path = ts::write_temp(graph_to_json(petersen()), "petersen");
    std::string out = ts::run_cli("aut --graph " + path, &code);
    CHECK(code == 0);
    json j = json::parse(out);
    CHECK(j["order"] == "2^3·3·5");
    CHECK(j["orbits"].size() == 1);
    CHECK(j["generators"].size() >= 1);

    std::string heawood = ts::write_temp(graph_to_json(projective_plane_incidence(2)), "heawood");
    out = ts::run_cli("aut --graph " + heawood + " --type-preserving", &code);
    CHECK(json::parse(out)["order"] == "2^3·3·7");

    // fixing one flag pointwise inside the type-preserving group
    Graph h = projective_plane_incidence(2);
    auto edge = h.edges().front();
    out = ts::run_cli("aut --graph " + heawood + " --type-preserving --fix " +
                          std::to_string(edge.first) + "," + std::to_string(edge.second),
                      &code);
    CHECK(json::parse(out)["order"] == "2^3");
}

TEST_CASE("law derive and check with exit codes") {
    int code = -1;
    std::string petersen_path = ts::write_temp(graph_to_json(petersen()), "petersen");
    std::string law_doc = ts::run_cli("law derive --links " + petersen_path, &code);
    CHECK(code == 0);
    json law = json::parse(law_doc);
    CHECK(law["primes"].size() == 3);
    CHECK(law["primes"][0]["p"] == 2);
    CHECK(law["primes"][0]["alpha"] == 3);
    CHECK(law["primes"][0]["alpha_prime"] == 2);

    std::string law_path = ts::write_temp(law_doc, "law");
    std::string verdict =
        ts::run_cli("law check --law " + law_path + " --covolume 1/360", &code);
    CHECK(code == 1);
    json v = json::parse(verdict);
    CHECK(v["admissible"] == false);
    CHECK(v["violated_rule"] == "(b)");
    CHECK(v["witness_prime"] == 3);

    ts::run_cli("law check --law " + law_path + " --covolume 1/120", &code);
    CHECK(code == 0);

    // registered links mix with graphs
    std::string reg =
        ts::run_cli("link register --name 120-cell --aut-order 14400 --fixator-order 1", &code);
    std::string reg_path = ts::write_temp(reg, "reg");
    std::string mixed = ts::run_cli("law derive --links " + reg_path, &code);
    CHECK(code == 0);
    CHECK(json::parse(mixed)["primes"].size() == 3);

    // the face rule differs from the vertex rule
    std::string k22_path = ts::write_temp(graph_to_json(complete_bipartite(2, 2)), "k22");
    std::string k22_law = ts::run_cli("law derive --links " + k22_path, &code);
    std::string k22_law_path = ts::write_temp(k22_law, "k22law");
    ts::run_cli("law check --law " + k22_law_path + " --covolume 1/2", &code);
    CHECK(code == 0);
    ts::run_cli("law check --law " + k22_law_path + " --covolume 1/2 --face", &code);
    CHECK(code == 1);
}

TEST_CASE("covol pipelines") {
    int code = -1;
    std::string quotient = ts::run_cli("covol canonical --family bourdon --m 2 --n 2 --r 5", &code);
    CHECK(code == 0);
    std::string covol = ts::run_cli("covol --quotient - --dim 0", &code, quotient);
    CHECK(code == 0);
    CHECK(covol == "\"5/4\"\n");
    covol = ts::run_cli("covol --quotient - --dim 2", &code, quotient);
    CHECK(covol == "\"1\"\n");
    std::string cx = ts::run_cli("covol cx --quotient -", &code, quotient);
    CHECK(cx == "\"5/4\"\n");

    std::string heawood = ts::write_temp(graph_to_json(projective_plane_incidence(2)), "heawood");
    std::string building =
        ts::run_cli("covol canonical --family building --link " + heawood + " --r 6", &code);
    CHECK(code == 0);
    CHECK(ts::run_cli("covol --quotient - --dim 0", &code, building) == "\"1/28\"\n");
    CHECK(ts::run_cli("covol cx --quotient -", &code, building) == "\"2/7\"\n");

    ts::run_cli("covol --dim 0", &code);
    CHECK(code == 2);  // no quotient given
    ts::run_cli("covol --quotient - --dim 1", &code, quotient);
    CHECK(code == 2);  // only dimensions 0 and 2 exist
}

TEST_CASE("ball commands") {
    int code = -1;
    std::string complex = ts::run_cli("ball grow --m 2 --n 2 --r 5 --radius 1", &code);
    CHECK(code == 0);
    CellComplex c = complex_from_json(complex);
    CHECK(c.cell_count(2) == 4);

    std::string out_path = "/tmp/covolat_test_ball_out.json";
    ts::run_cli("ball grow --m 2 --n 3 --r 6 --radius 1 --out " + out_path, &code);
    CHECK(code == 0);
    CellComplex from_file = complex_from_json(covolat::read_input(out_path));
    CHECK(from_file.cell_count(2) == 6);

    std::string tower = ts::run_cli("ball tower --m 2 --n 2 --r 5 --radius 1", &code);
    CHECK(code == 0);
    json rows = json::parse(tower);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["order"] == "1");
    CHECK(rows[1]["order"] == "2^3");
    CHECK(rows[1]["image"] == "1");

    ts::run_cli("ball grow --m 3 --n 2 --r 5 --radius 1", &code);
    CHECK(code == 2);  // parity violation
    ts::run_cli("--cap 10 ball grow --m 2 --n 2 --r 5 --radius 2", &code);
    CHECK(code == 2);  // cap exceeded
}

TEST_CASE("unknown verbs and bad input fail with exit 2") {
    int code = -1;
    ts::run_cli("frobnicate", &code);
    CHECK(code == 2);
    ts::run_cli("law check --law /nonexistent.json --covolume 1/2", &code);
    CHECK(code == 2);
    ts::run_cli("aut --graph -", &code, "{not json");
    CHECK(code == 2);
    ts::run_cli("--format yaml link make --family petersen", &code);
    CHECK(code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
    int code = -1;
    for (const std::string& args :
         {std::string("link make --family pg2 --q 3"), std::string("ball tower --m 2 --n 2 --r 5 --radius 1"),
          std::string("covol canonical --family bourdon --m 3 --n 2 --r 6")}) {
        std::string first = ts::run_cli(args, &code);
        CHECK(code == 0);
        std::string second = ts::run_cli(args, &code);
        CHECK(first == second);
    }
}

}  // TEST_SUITE
