// Command-line front end over the cubewalk shared library. Machine-readable
// JSON goes to stdout; one-line human summaries and errors go to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cubewalk.h"

namespace {

constexpr double kHalfPi = 1.5707963267948966;

struct GraphDeleter {
    void operator()(cw_graph* g) const { cw_graph_free(g); }
};
struct CircuitDeleter {
    void operator()(cw_circuit* c) const { cw_circuit_free(c); }
};
using GraphPtr = std::unique_ptr<cw_graph, GraphDeleter>;
using CircuitPtr = std::unique_ptr<cw_circuit, CircuitDeleter>;

struct StringOut {
    char* s = nullptr;
    ~StringOut() { cw_string_free(s); }
};

// Maps a library failure to the process exit code and reports it.
int report_failure(cw_status status) {
    std::cerr << "error: " << cw_last_error() << " [" << cw_status_name(status) << "]\n";
    return status == CW_ERR_VERIFICATION ? 1 : 2;
}

GraphPtr load_graph(const std::string& path, int& exit_code) {
    cw_graph* g = nullptr;
    if (cw_status s = cw_graph_parse_file(path.c_str(), &g)) {
        exit_code = report_failure(s);
        return nullptr;
    }
    return GraphPtr(g);
}

int run_sigma(const std::string& path) {
    int exit_code = 0;
    GraphPtr g = load_graph(path, exit_code);
    if (!g) return exit_code;

    StringOut json;
    if (cw_status s = cw_predict_json(g.get(), /*include_pairs=*/1, &json.s))
        return report_failure(s);
    StringOut bits;
    if (cw_status s = cw_sigma(g.get(), &bits.s)) return report_failure(s);

    std::cout << json.s << "\n";
    std::cerr << "sigma=" << bits.s << "\n";
    return 0;
}

int run_circuit(const std::string& path, double time, const std::string& format) {
    int exit_code = 0;
    GraphPtr g = load_graph(path, exit_code);
    if (!g) return exit_code;

    cw_circuit* raw = nullptr;
    if (cw_status s = cw_circuit_synthesize(g.get(), time, &raw)) return report_failure(s);
    CircuitPtr c(raw);

    StringOut text;
    cw_status s = format == "json" ? cw_circuit_to_json(c.get(), &text.s)
                                   : cw_circuit_to_qasm(c.get(), &text.s);
    if (s) return report_failure(s);
    std::cout << text.s;
    if (format == "json") std::cout << "\n";

    size_t h = 0, cnot = 0, rz = 0;
    cw_circuit_gate_counts(c.get(), &h, &cnot, &rz);
    std::cerr << "gates: h=" << h << " cx=" << cnot << " rz=" << rz << "\n";
    return 0;
}

int run_simulate(const std::string& path, double time, const std::string& start,
                 cw_backend backend, std::uint64_t shots, std::uint64_t seed) {
    int exit_code = 0;
    GraphPtr g = load_graph(path, exit_code);
    if (!g) return exit_code;

    const char* start_bits = start.empty() ? nullptr : start.c_str();
    StringOut json;
    cw_status s = shots > 0
                      ? cw_sample_json(g.get(), time, start_bits, backend, shots, seed, &json.s)
                      : cw_simulate_json(g.get(), time, start_bits, backend, &json.s);
    if (s) return report_failure(s);
    std::cout << json.s << "\n";
    return 0;
}

int run_verify(const std::string& path, double tolerance, bool corrupt) {
    int exit_code = 0;
    GraphPtr g = load_graph(path, exit_code);
    if (!g) return exit_code;

    int ok = 0;
    StringOut json;
    if (cw_status s = cw_verify_json(g.get(), tolerance, corrupt ? 1 : 0, &ok, &json.s))
        return report_failure(s);
    std::cout << json.s << "\n";
    std::cerr << (ok ? "verified: prediction confirmed on both backends\n"
                     : "FAILED: backends disagree with the prediction\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-time quantum walks on weighted cubelike graphs"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    std::string graph_path;
    double time = kHalfPi;
    std::string start;
    std::string format = "qasm";
    std::string backend_name = "circuit";
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    bool corrupt = false;

    auto add_graph_option = [&graph_path](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "Graph definition file")->required();
    };

    CLI::App* sigma = app.add_subcommand("sigma", "Predict transfer target or periodicity");
    add_graph_option(sigma);

    CLI::App* circuit = app.add_subcommand("circuit", "Emit the walk circuit");
    add_graph_option(circuit);
    circuit->add_option("--time", time, "Evolution time (default pi/2)");
    circuit->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"qasm", "json"}));

    CLI::App* simulate = app.add_subcommand("simulate", "Evolve a start vertex and print the distribution");
    add_graph_option(simulate);
    simulate->add_option("--time", time, "Evolution time (default pi/2)");
    simulate->add_option("--start", start, "Start vertex bitstring (default all zeros)");
    simulate->add_option("--shots", shots, "Sample this many shots instead of exact probabilities");
    simulate->add_option("--seed", seed, "Sampling seed (default 1)");
    simulate->add_option("--backend", backend_name, "Evolution backend")
        ->check(CLI::IsMember({"circuit", "oracle"}));

    CLI::App* verify = app.add_subcommand("verify", "Confirm the prediction on both backends");
    add_graph_option(verify);
    verify->add_option("--tol", tolerance, "Fidelity and agreement tolerance (default 1e-9)");
    verify->add_flag("--corrupt-circuit", corrupt, "Perturb the circuit to exercise the failure path")
        ->group("");  // test hook, hidden from help

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (sigma->parsed()) return run_sigma(graph_path);
    if (circuit->parsed()) return run_circuit(graph_path, time, format);
    if (simulate->parsed())
        return run_simulate(graph_path, time, start,
                            backend_name == "oracle" ? CW_BACKEND_ORACLE : CW_BACKEND_CIRCUIT,
                            shots, seed);
    if (verify->parsed()) return run_verify(graph_path, tolerance, corrupt);
    return 2;
}
