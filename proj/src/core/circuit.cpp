#include "core/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cubewalk {

Gate Gate::h(int qubit) { return {GateKind::H, qubit}; }

Gate Gate::cnot(int control, int target) {
    if (control == target) throw std::invalid_argument("CNOT control equals target");
    return {GateKind::Cnot, target, control};
}

Gate Gate::rz(int qubit, double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("Rz angle must be finite");
    return {GateKind::Rz, qubit, -1, theta};
}

Circuit::Circuit(int data_qubits) : n_(data_qubits) {
    if (data_qubits < 1 || data_qubits > GroupElement::kMaxDimension)
        throw std::invalid_argument("data qubit count out of range");
}

void Circuit::append(Gate g) {
    const int limit = total_qubits();
    if (g.target < 0 || g.target >= limit ||
        (g.kind == GateKind::Cnot && (g.control < 0 || g.control >= limit)))
        throw std::invalid_argument("gate qubit index out of range");
    gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
    if (other.n_ != n_) throw std::invalid_argument("cannot append circuit of different width");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit synthesize_term(GroupElement x, std::int64_t weight, double time) {
    if (x.is_zero()) throw std::invalid_argument("loop term rejected: x is the identity");
    if (weight == 0) throw std::invalid_argument("term weight must be non-zero");

    const int n = x.dimension();
    Circuit c(n);
    for (int q = 0; q < n; ++q) c.append(Gate::h(q));
    // bit(q+1) is the 1-based position from the left; qubit q carries it
    for (int q = 0; q < n; ++q)
        if (x.bit(q + 1)) c.append(Gate::cnot(q, c.ancilla()));
    c.append(Gate::rz(c.ancilla(), 2.0 * time * static_cast<double>(weight)));
    for (int q = n - 1; q >= 0; --q)
        if (x.bit(q + 1)) c.append(Gate::cnot(q, c.ancilla()));
    for (int q = 0; q < n; ++q) c.append(Gate::h(q));
    return c;
}

Circuit synthesize_walk(const WeightFunction& f, double time) {
    if (f.support_size() == 0)
        throw std::invalid_argument("empty support: no Hamiltonian to evolve");

    Circuit c(f.dimension());
    for (const auto& x : f.support()) c.append(synthesize_term(x, f.at(x), time));
    cancel_adjacent_hadamards(c);
    return c;
}

std::size_t cancel_adjacent_hadamards(Circuit& c) {
    std::vector<Gate> gates = c.gates();
    std::vector<bool> removed(gates.size(), false);
    std::size_t total = 0;

    // Only pairs separated by other Hadamards are touched: crossing a parity
    // kernel on an idle qubit would shave the closed-form layer count.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (removed[i] || gates[i].kind != GateKind::H) continue;
            const int q = gates[i].target;
            for (std::size_t j = i + 1; j < gates.size(); ++j) {
                if (removed[j]) continue;
                if (gates[j].kind != GateKind::H) break;
                if (gates[j].target != q) continue;
                removed[i] = removed[j] = true;
                total += 2;
                changed = true;
                break;
            }
        }
    }

    if (total == 0) return 0;
    Circuit out(c.data_qubits());
    for (std::size_t i = 0; i < gates.size(); ++i)
        if (!removed[i]) out.append(gates[i]);
    c = std::move(out);
    return total;
}

GateCounts gate_counts(const Circuit& c) {
    GateCounts counts;
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H: ++counts.h; break;
            case GateKind::Cnot: ++counts.cnot; break;
            case GateKind::Rz: ++counts.rz; break;
        }
    }
    return counts;
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.total_qubits() << "];\n";
    out << "creg c[" << c.data_qubits() << "];\n";
    char angle[64];
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
                out << "h q[" << g.target << "];\n";
                break;
            case GateKind::Cnot:
                out << "cx q[" << g.control << "],q[" << g.target << "];\n";
                break;
            case GateKind::Rz:
                std::snprintf(angle, sizeof angle, "%.17g", g.theta);
                out << "rz(" << angle << ") q[" << g.target << "];\n";
                break;
        }
    }
    for (int q = 0; q < c.data_qubits(); ++q)
        out << "measure q[" << q << "] -> c[" << q << "];\n";
    return out.str();
}

std::string emit_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H: gates.push_back({{"kind", "h"}, {"q", g.target}}); break;
            case GateKind::Cnot: gates.push_back({{"kind", "cx"}, {"c", g.control}, {"t", g.target}}); break;
            case GateKind::Rz: gates.push_back({{"kind", "rz"}, {"q", g.target}, {"theta", g.theta}}); break;
        }
    }
    return nlohmann::json{{"n", c.data_qubits()}, {"gates", std::move(gates)}}.dump();
}

}  // namespace cubewalk
