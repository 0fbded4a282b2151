/*
 * cubewalk -- continuous-time quantum walks on weighted cubelike graphs.
 *
 * C interface of the shared library. A graph over Z_2^n is defined by an
 * integer weight function on the non-zero group elements; the library builds
 * the gate-level walk circuit for e^{-iAt}, simulates it exactly, predicts
 * perfect state transfer or periodicity at t = pi/2 from the weight parities,
 * and verifies the prediction against an independent spectral evolution.
 *
 * All functions return CW_OK on success. On failure they return a status code
 * and leave a human-readable message in cw_last_error() (thread-local, valid
 * until the next cubewalk call on the same thread). Strings returned through
 * char** out-parameters are heap-allocated; release them with cw_string_free.
 */

#ifndef CUBEWALK_H
#define CUBEWALK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CUBEWALK_API __declspec(dllexport)
#else
#define CUBEWALK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
    CW_OK = 0,
    CW_ERR_INVALID_ARGUMENT = 1, /* bad handle, bitstring, or precondition */
    CW_ERR_PARSE = 2,            /* malformed graph text; message carries the line */
    CW_ERR_CAPACITY = 3,         /* dimension exceeds a backend limit */
    CW_ERR_VERIFICATION = 4,     /* fidelity below threshold where guaranteed */
    CW_ERR_INTERNAL = 5
} cw_status;

typedef enum cw_backend {
    CW_BACKEND_CIRCUIT = 0, /* synthesize the circuit and simulate it (n <= 20) */
    CW_BACKEND_ORACLE = 1   /* exact spectral evolution (n <= 24) */
} cw_backend;

/* Weight function over Z_2^n (the graph definition). */
typedef struct cw_graph cw_graph;
/* Synthesized gate list over n data qubits plus one ancilla. */
typedef struct cw_circuit cw_circuit;

CUBEWALK_API const char* cw_version(void);
CUBEWALK_API const char* cw_status_name(cw_status status);
CUBEWALK_API const char* cw_last_error(void);
CUBEWALK_API void cw_string_free(char* s);

/*
 * Graph construction. Text format, one entry per line:
 *     n 3
 *     001 4
 *     011 8
 * '#' starts a comment. Bitstrings are n characters, leftmost first; weights
 * are non-zero integers; the all-zero bitstring (a loop) is rejected.
 */
CUBEWALK_API cw_status cw_graph_parse(const char* text, cw_graph** out);
CUBEWALK_API cw_status cw_graph_parse_file(const char* path, cw_graph** out);
CUBEWALK_API cw_status cw_graph_from_entries(int n, const char* const* bitstrings,
                                             const int64_t* weights, size_t count,
                                             cw_graph** out);
CUBEWALK_API void cw_graph_free(cw_graph* g);

CUBEWALK_API int cw_graph_dimension(const cw_graph* g);
CUBEWALK_API size_t cw_graph_support_size(const cw_graph* g);
/* Canonical text form: header plus entries in ascending bitstring order. */
CUBEWALK_API cw_status cw_graph_canonical_text(const cw_graph* g, char** out_text);

/*
 * Parity analysis. out_bits receives the n-character sigma bitstring. The
 * prediction JSON carries sigma, the PST/PERIODIC verdict, tau, source and
 * target; with include_pairs != 0 and sigma != 0 it also lists the vertex
 * pairing {u, u xor sigma}.
 */
CUBEWALK_API cw_status cw_sigma(const cw_graph* g, char** out_bits);
CUBEWALK_API cw_status cw_predict_json(const cw_graph* g, int include_pairs, char** out_json);

/*
 * Circuit synthesis for e^{-iAt}. Gate counts after Hadamard cancellation:
 * 2n H gates, one Rz per support element, and twice the summed Hamming
 * weights in CNOTs (compute plus uncompute parity ladders).
 */
CUBEWALK_API cw_status cw_circuit_synthesize(const cw_graph* g, double time, cw_circuit** out);
CUBEWALK_API void cw_circuit_free(cw_circuit* c);
CUBEWALK_API cw_status cw_circuit_gate_counts(const cw_circuit* c, size_t* out_h,
                                              size_t* out_cnot, size_t* out_rz);
CUBEWALK_API cw_status cw_circuit_to_qasm(const cw_circuit* c, char** out_text);
CUBEWALK_API cw_status cw_circuit_to_json(const cw_circuit* c, char** out_text);

/*
 * Evolution from |start_bits> for the given time. cw_simulate_json returns
 * {"n":...,"probs":{...}} with exact probabilities; cw_sample_json returns
 * {"n":...,"shots":...,"seed":...,"counts":{...}} with a deterministic
 * multinomial sample. start_bits NULL means the all-zero vertex.
 */
CUBEWALK_API cw_status cw_simulate_json(const cw_graph* g, double time, const char* start_bits,
                                        cw_backend backend, char** out_json);
CUBEWALK_API cw_status cw_sample_json(const cw_graph* g, double time, const char* start_bits,
                                      cw_backend backend, uint64_t shots, uint64_t seed,
                                      char** out_json);

/*
 * Full verification: predicts from the parities, evolves on both backends at
 * tau = pi/2, and cross-checks them amplitude by amplitude. *out_ok is set to
 * 1 when both fidelities reach 1 - tolerance and the backends agree within
 * tolerance, else 0 (the JSON then includes both distributions).
 * corrupt_circuit != 0 deliberately perturbs one rotation angle; it exists so
 * callers can exercise the failure path.
 */
CUBEWALK_API cw_status cw_verify_json(const cw_graph* g, double tolerance, int corrupt_circuit,
                                      int* out_ok, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CUBEWALK_H */
