#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/group.hpp"

namespace cubewalk {

enum class GateKind { H, Cnot, Rz };

// One gate over n data qubits plus the parity ancilla at index n.
struct Gate {
    GateKind kind;
    int target;
    int control = -1;    // Cnot only
    double theta = 0.0;  // Rz only

    static Gate h(int qubit);
    static Gate cnot(int control, int target);
    static Gate rz(int qubit, double theta);

    bool touches(int qubit) const {
        return target == qubit || (kind == GateKind::Cnot && control == qubit);
    }

    friend bool operator==(const Gate&, const Gate&) = default;
};

// Ordered gate list over n data qubits and one ancilla (index n). Every
// synthesized circuit maps |psi> (x) |0> to (U|psi>) (x) |0>: the ancilla is
// computed and uncomputed within each term.
class Circuit {
public:
    explicit Circuit(int data_qubits);

    int data_qubits() const { return n_; }
    int ancilla() const { return n_; }
    int total_qubits() const { return n_ + 1; }

    const std::vector<Gate>& gates() const { return gates_; }
    void append(Gate g);
    void append(const Circuit& other);

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    int n_;
    std::vector<Gate> gates_;
};

struct GateCounts {
    std::size_t h = 0;
    std::size_t cnot = 0;
    std::size_t rz = 0;

    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

// One factor of the evolution: a Hadamard layer on all data qubits, the CNOT
// parity ladder of x onto the ancilla (ascending qubit), Rz(2*t*weight) on the
// ancilla, the ladder uncomputed (descending), and the closing Hadamard layer.
// The Rz convention is diag(e^{-i theta/2}, e^{+i theta/2}), so parity-even
// basis states pick up e^{-i*t*weight} and parity-odd ones e^{+i*t*weight}.
Circuit synthesize_term(GroupElement x, std::int64_t weight, double time);

// Product of synthesize_term over the support in ascending index order, with
// the Hadamard layers between consecutive terms cancelled (H^2 = I). Counts
// after cancellation: h = 2n, rz = Delta, cnot = 2 * sum of Hamming weights.
Circuit synthesize_walk(const WeightFunction& f, double time);

// Peephole pass removing H pairs on the same qubit that are separated only by
// Hadamards on other qubits, i.e. the back-to-back layers between consecutive
// terms. Returns the number of gates removed.
std::size_t cancel_adjacent_hadamards(Circuit& c);

GateCounts gate_counts(const Circuit& c);

// OpenQASM 2.0 program: qreg q[n+1], creg c[n], the gate list, and a
// measurement of each data qubit. Angles carry 17 significant digits.
std::string emit_qasm(const Circuit& c);

// {"n":..., "gates":[{"kind":"h","q":0}, {"kind":"cx","c":0,"t":3},
//                    {"kind":"rz","q":3,"theta":...}]}
std::string emit_json(const Circuit& c);

}  // namespace cubewalk
