#include "cubewalk.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/circuit.hpp"
#include "core/errors.hpp"
#include "core/graph_file.hpp"
#include "core/group.hpp"
#include "core/pst.hpp"
#include "core/spectral.hpp"
#include "core/statevector.hpp"

using namespace cubewalk;

struct cw_graph {
    WeightFunction f;
};

struct cw_circuit {
    Circuit c;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cw_status fail(cw_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating core exceptions to status codes.
template <typename Fn>
cw_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const ParseError& e) {
        return fail(CW_ERR_PARSE, e.what());
    } catch (const CapacityError& e) {
        return fail(CW_ERR_CAPACITY, e.what());
    } catch (const VerificationError& e) {
        return fail(CW_ERR_VERIFICATION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CW_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CW_ERR_CAPACITY, "out of memory");
    } catch (const std::exception& e) {
        return fail(CW_ERR_INTERNAL, e.what());
    }
}

cw_status require(bool ok, const char* what) {
    return ok ? CW_OK : fail(CW_ERR_INVALID_ARGUMENT, what);
}

GroupElement parse_start(const cw_graph* g, const char* start_bits) {
    if (start_bits == nullptr) return GroupElement::zero(g->f.dimension());
    const GroupElement start = GroupElement::parse(start_bits);
    if (start.dimension() != g->f.dimension())
        throw std::invalid_argument("start bitstring length does not match graph dimension");
    return start;
}

Distribution evolve_distribution(const cw_graph* g, double time, const char* start_bits,
                                 cw_backend backend) {
    const GroupElement start = parse_start(g, start_bits);
    if (backend == CW_BACKEND_ORACLE) {
        const auto amps = evolve(g->f, start, time);
        Distribution d;
        d.n = g->f.dimension();
        d.probs.resize(amps.size());
        for (std::size_t v = 0; v < amps.size(); ++v) d.probs[v] = std::norm(amps[v]);
        return d;
    }
    if (backend != CW_BACKEND_CIRCUIT) throw std::invalid_argument("unknown backend");
    return measure_distribution(run(synthesize_walk(g->f, time), start));
}

}  // namespace

extern "C" {

const char* cw_version(void) { return "1.0.0"; }

const char* cw_status_name(cw_status status) {
    switch (status) {
        case CW_OK: return "CW_OK";
        case CW_ERR_INVALID_ARGUMENT: return "CW_ERR_INVALID_ARGUMENT";
        case CW_ERR_PARSE: return "CW_ERR_PARSE";
        case CW_ERR_CAPACITY: return "CW_ERR_CAPACITY";
        case CW_ERR_VERIFICATION: return "CW_ERR_VERIFICATION";
        case CW_ERR_INTERNAL: return "CW_ERR_INTERNAL";
    }
    return "CW_ERR_UNKNOWN";
}

const char* cw_last_error(void) { return g_last_error.c_str(); }

void cw_string_free(char* s) { delete[] s; }

cw_status cw_graph_parse(const char* text, cw_graph** out) {
    if (cw_status s = require(text && out, "null argument")) return s;
    return guarded([&] {
        *out = new cw_graph{parse_graph_text(text)};
        return CW_OK;
    });
}

cw_status cw_graph_parse_file(const char* path, cw_graph** out) {
    if (cw_status s = require(path && out, "null argument")) return s;
    return guarded([&] {
        *out = new cw_graph{parse_graph_file(path)};
        return CW_OK;
    });
}

cw_status cw_graph_from_entries(int n, const char* const* bitstrings, const int64_t* weights,
                                size_t count, cw_graph** out) {
    if (cw_status s = require(out && (count == 0 || (bitstrings && weights)), "null argument"))
        return s;
    return guarded([&] {
        std::vector<std::pair<std::string, std::int64_t>> entries;
        entries.reserve(count);
        for (size_t i = 0; i < count; ++i) entries.emplace_back(bitstrings[i], weights[i]);
        *out = new cw_graph{WeightFunction::from_entries(n, entries)};
        return CW_OK;
    });
}

void cw_graph_free(cw_graph* g) { delete g; }

int cw_graph_dimension(const cw_graph* g) { return g ? g->f.dimension() : 0; }

size_t cw_graph_support_size(const cw_graph* g) { return g ? g->f.support_size() : 0; }

cw_status cw_graph_canonical_text(const cw_graph* g, char** out_text) {
    if (cw_status s = require(g && out_text, "null argument")) return s;
    return guarded([&] {
        *out_text = dup_string(graph_to_text(g->f));
        return CW_OK;
    });
}

cw_status cw_sigma(const cw_graph* g, char** out_bits) {
    if (cw_status s = require(g && out_bits, "null argument")) return s;
    return guarded([&] {
        *out_bits = dup_string(sigma(g->f).str());
        return CW_OK;
    });
}

cw_status cw_predict_json(const cw_graph* g, int include_pairs, char** out_json) {
    if (cw_status s = require(g && out_json, "null argument")) return s;
    return guarded([&] {
        const PstReport report = predict(g->f);
        if (include_pairs && report.verdict == Verdict::Pst) {
            const auto pairs = pst_pairs(g->f);
            *out_json = dup_string(report_json(report, &pairs));
        } else {
            *out_json = dup_string(report_json(report));
        }
        return CW_OK;
    });
}

cw_status cw_circuit_synthesize(const cw_graph* g, double time, cw_circuit** out) {
    if (cw_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        *out = new cw_circuit{synthesize_walk(g->f, time)};
        return CW_OK;
    });
}

void cw_circuit_free(cw_circuit* c) { delete c; }

cw_status cw_circuit_gate_counts(const cw_circuit* c, size_t* out_h, size_t* out_cnot,
                                 size_t* out_rz) {
    if (cw_status s = require(c && out_h && out_cnot && out_rz, "null argument")) return s;
    const GateCounts counts = gate_counts(c->c);
    *out_h = counts.h;
    *out_cnot = counts.cnot;
    *out_rz = counts.rz;
    return CW_OK;
}

cw_status cw_circuit_to_qasm(const cw_circuit* c, char** out_text) {
    if (cw_status s = require(c && out_text, "null argument")) return s;
    return guarded([&] {
        *out_text = dup_string(emit_qasm(c->c));
        return CW_OK;
    });
}

cw_status cw_circuit_to_json(const cw_circuit* c, char** out_text) {
    if (cw_status s = require(c && out_text, "null argument")) return s;
    return guarded([&] {
        *out_text = dup_string(emit_json(c->c));
        return CW_OK;
    });
}

cw_status cw_simulate_json(const cw_graph* g, double time, const char* start_bits,
                           cw_backend backend, char** out_json) {
    if (cw_status s = require(g && out_json, "null argument")) return s;
    return guarded([&] {
        *out_json = dup_string(distribution_json(evolve_distribution(g, time, start_bits, backend)));
        return CW_OK;
    });
}

cw_status cw_sample_json(const cw_graph* g, double time, const char* start_bits,
                         cw_backend backend, uint64_t shots, uint64_t seed, char** out_json) {
    if (cw_status s = require(g && out_json, "null argument")) return s;
    return guarded([&] {
        *out_json =
            dup_string(counts_json(evolve_distribution(g, time, start_bits, backend), shots, seed));
        return CW_OK;
    });
}

cw_status cw_verify_json(const cw_graph* g, double tolerance, int corrupt_circuit, int* out_ok,
                         char** out_json) {
    if (cw_status s = require(g && out_ok && out_json, "null argument")) return s;
    return guarded([&] {
        const VerifyResult result =
            verify(g->f, VerifyOptions{.tolerance = tolerance,
                                       .corrupt_circuit = corrupt_circuit != 0});
        *out_ok = result.ok ? 1 : 0;
        *out_json = dup_string(verify_json(result));
        return CW_OK;
    });
}

} /* extern "C" */
