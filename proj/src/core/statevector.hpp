#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/circuit.hpp"
#include "core/group.hpp"

namespace cubewalk {

using Complex = std::complex<double>;

// Dense amplitude vector over n_qubits qubits. Qubit q corresponds to bit
// (n_qubits - 1 - q) of the basis index, so an index written in binary reads
// as the qubit values left to right; with the ancilla at qubit n this puts
// vertex labels in the high bits and the ancilla in bit 0.
class StateVector {
public:
    static constexpr int kMaxQubits = 26;

    StateVector(int n_qubits, std::uint64_t basis_index);

    int qubit_count() const { return n_qubits_; }
    std::uint64_t size() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const { return amps_.at(index); }

    void apply(const Gate& g);
    double norm_sq() const;

private:
    std::uint64_t index_bit(int qubit) const;

    int n_qubits_;
    std::vector<Complex> amps_;
};

// Initializes |start> (x) |0>_ancilla and applies the whole gate list. The
// resulting data register equals the walk evolution of |start>.
StateVector run(const Circuit& c, GroupElement start);

// Exact vertex probabilities with the ancilla post-selected on 0.
struct Distribution {
    int n = 0;                  // data qubits
    std::vector<double> probs;  // size 2^n, indexed by vertex

    double at(GroupElement v) const;
};

// Requires the ancilla (last qubit) amplitude mass at 1 to be below 1e-9;
// synthesized circuits restore it exactly.
Distribution measure_distribution(const StateVector& s);

// Multinomial shot counts keyed by the canonical vertex bitstring,
// deterministic for a fixed seed. Vertices with zero sampled count are absent.
std::map<std::string, std::uint64_t> sample(const Distribution& d, std::uint64_t shots,
                                            std::uint64_t seed);

// {"n":..., "probs":{"101":1.0, ...}}; probabilities below 1e-12 are omitted.
std::string distribution_json(const Distribution& d);

// {"n":..., "shots":..., "seed":..., "counts":{"101":1024, ...}}
std::string counts_json(const Distribution& d, std::uint64_t shots, std::uint64_t seed);

}  // namespace cubewalk
