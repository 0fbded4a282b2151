// Exercises the shared library exactly as an external C client would:
// only cubewalk.h, opaque handles, and status codes.

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <cstring>
#include <fstream>
#include <string>

#include "cubewalk.h"

namespace {

struct Graph {
    cw_graph* g = nullptr;
    ~Graph() { cw_graph_free(g); }
};

struct Str {
    char* s = nullptr;
    ~Str() { cw_string_free(s); }
    std::string view() const { return s ? std::string(s) : std::string(); }
};

constexpr const char* kWeightedGraph = "n 3\n001 4\n011 8\n101 3\n";
constexpr const char* kHypercube = "n 3\n001 1\n010 1\n100 1\n";

}  // namespace

TEST_CASE("capi: parse, inspect, canonicalize") {
    Graph graph;
    REQUIRE(cw_graph_parse(kWeightedGraph, &graph.g) == CW_OK);
    REQUIRE(cw_graph_dimension(graph.g) == 3);
    REQUIRE(cw_graph_support_size(graph.g) == 3);

    Str text;
    REQUIRE(cw_graph_canonical_text(graph.g, &text.s) == CW_OK);
    REQUIRE(text.view() == "n 3\n001 4\n011 8\n101 3\n");
}

TEST_CASE("capi: parse errors carry the line and code") {
    cw_graph* g = nullptr;
    REQUIRE(cw_graph_parse("n 3\n000 5\n", &g) == CW_ERR_PARSE);
    REQUIRE(g == nullptr);
    REQUIRE(std::string(cw_last_error()).find("line 2") != std::string::npos);
    REQUIRE(std::string(cw_last_error()).find("loop weight not allowed") != std::string::npos);
    REQUIRE(std::string(cw_status_name(CW_ERR_PARSE)) == "CW_ERR_PARSE");

    REQUIRE(cw_graph_parse(nullptr, &g) == CW_ERR_INVALID_ARGUMENT);
    REQUIRE(cw_graph_parse_file("/no/such/file", &g) == CW_ERR_PARSE);
}

TEST_CASE("capi: graph from entries") {
    const char* bits[] = {"01", "10"};
    const int64_t weights[] = {1, 1};
    Graph graph;
    REQUIRE(cw_graph_from_entries(2, bits, weights, 2, &graph.g) == CW_OK);
    REQUIRE(cw_graph_support_size(graph.g) == 2);

    cw_graph* bad = nullptr;
    const char* loop[] = {"00"};
    const int64_t w[] = {5};
    REQUIRE(cw_graph_from_entries(2, loop, w, 1, &bad) == CW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("capi: sigma and prediction json") {
    Graph graph;
    REQUIRE(cw_graph_parse(kHypercube, &graph.g) == CW_OK);

    Str bits;
    REQUIRE(cw_sigma(graph.g, &bits.s) == CW_OK);
    REQUIRE(bits.view() == "111");

    Str json;
    REQUIRE(cw_predict_json(graph.g, 1, &json.s) == CW_OK);
    const auto j = nlohmann::json::parse(json.view());
    REQUIRE(j["sigma"] == "111");
    REQUIRE(j["verdict"] == "PST");
    REQUIRE(j["pairs"].size() == 4);

    Str no_pairs;
    REQUIRE(cw_predict_json(graph.g, 0, &no_pairs.s) == CW_OK);
    REQUIRE_FALSE(nlohmann::json::parse(no_pairs.view()).contains("pairs"));
}

TEST_CASE("capi: circuit synthesis, counts, emitters") {
    Graph graph;
    REQUIRE(cw_graph_parse(kHypercube, &graph.g) == CW_OK);

    cw_circuit* c = nullptr;
    REQUIRE(cw_circuit_synthesize(graph.g, 1.5707963267948966, &c) == CW_OK);
    size_t h = 0, cnot = 0, rz = 0;
    REQUIRE(cw_circuit_gate_counts(c, &h, &cnot, &rz) == CW_OK);
    REQUIRE(h == 6);
    REQUIRE(cnot == 6);
    REQUIRE(rz == 3);

    Str qasm;
    REQUIRE(cw_circuit_to_qasm(c, &qasm.s) == CW_OK);
    REQUIRE(qasm.view().rfind("OPENQASM 2.0;\n", 0) == 0);
    REQUIRE(qasm.view().find("qreg q[4];") != std::string::npos);

    Str json;
    REQUIRE(cw_circuit_to_json(c, &json.s) == CW_OK);
    const auto j = nlohmann::json::parse(json.view());
    REQUIRE(j["n"] == 3);
    REQUIRE(j["gates"].size() == 15);
    cw_circuit_free(c);

    // empty support cannot be synthesized
    Graph empty;
    REQUIRE(cw_graph_parse("n 2\n", &empty.g) == CW_OK);
    cw_circuit* none = nullptr;
    REQUIRE(cw_circuit_synthesize(empty.g, 1.0, &none) == CW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("capi: simulate on both backends") {
    Graph graph;
    REQUIRE(cw_graph_parse(kWeightedGraph, &graph.g) == CW_OK);

    for (const cw_backend backend : {CW_BACKEND_CIRCUIT, CW_BACKEND_ORACLE}) {
        Str json;
        REQUIRE(cw_simulate_json(graph.g, 1.5707963267948966, nullptr, backend, &json.s) == CW_OK);
        const auto j = nlohmann::json::parse(json.view());
        REQUIRE(j["n"] == 3);
        REQUIRE(j["probs"]["101"].get<double>() == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(j["probs"].size() == 1);
    }

    Str bad;
    REQUIRE(cw_simulate_json(graph.g, 1.0, "0101", CW_BACKEND_ORACLE, &bad.s) ==
            CW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("capi: sampling is deterministic per seed") {
    Graph graph;
    REQUIRE(cw_graph_parse(kHypercube, &graph.g) == CW_OK);

    Str a, b;
    REQUIRE(cw_sample_json(graph.g, 0.4, "000", CW_BACKEND_CIRCUIT, 512, 9, &a.s) == CW_OK);
    REQUIRE(cw_sample_json(graph.g, 0.4, "000", CW_BACKEND_CIRCUIT, 512, 9, &b.s) == CW_OK);
    REQUIRE(a.view() == b.view());

    const auto j = nlohmann::json::parse(a.view());
    REQUIRE(j["shots"] == 512);
    REQUIRE(j["seed"] == 9);
    std::uint64_t total = 0;
    for (const auto& [label, count] : j["counts"].items()) total += count.get<std::uint64_t>();
    REQUIRE(total == 512);

    Str bad;
    REQUIRE(cw_sample_json(graph.g, 0.4, nullptr, CW_BACKEND_CIRCUIT, 0, 1, &bad.s) ==
            CW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("capi: verification and the corruption hook") {
    Graph graph;
    REQUIRE(cw_graph_parse(kWeightedGraph, &graph.g) == CW_OK);

    int ok = 0;
    Str json;
    REQUIRE(cw_verify_json(graph.g, 1e-9, 0, &ok, &json.s) == CW_OK);
    REQUIRE(ok == 1);
    const auto j = nlohmann::json::parse(json.view());
    REQUIRE(j["ok"] == true);
    REQUIRE(j["prediction"]["sigma"] == "101");
    REQUIRE(j["circuit_fidelity"].get<double>() >= 1.0 - 1e-9);
    REQUIRE(j["oracle_fidelity"].get<double>() >= 1.0 - 1e-9);
    REQUIRE(j["max_backend_deviation"].get<double>() <= 1e-9);

    int bad_ok = 1;
    Str bad_json;
    REQUIRE(cw_verify_json(graph.g, 1e-9, 1, &bad_ok, &bad_json.s) == CW_OK);
    REQUIRE(bad_ok == 0);
    const auto bad = nlohmann::json::parse(bad_json.view());
    REQUIRE(bad["ok"] == false);
    REQUIRE(bad.contains("circuit_distribution"));
}

TEST_CASE("capi: capacity errors surface as codes") {
    std::string big = "n 22\n";
    big += std::string(21, '0') + "1 1\n";
    Graph graph;
    REQUIRE(cw_graph_parse(big.c_str(), &graph.g) == CW_OK);

    // circuit backend is capped at n <= 20; the oracle still works
    int ok = 0;
    char* out = nullptr;
    REQUIRE(cw_verify_json(graph.g, 1e-9, 0, &ok, &out) == CW_ERR_CAPACITY);
    REQUIRE(out == nullptr);
}

TEST_CASE("capi: version string") {
    REQUIRE(std::strlen(cw_version()) > 0);
}
