#include "core/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "core/errors.hpp"

namespace cubewalk {

namespace {

constexpr double kAncillaTolerance = 1e-9;
constexpr double kJsonProbFloor = 1e-12;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

StateVector::StateVector(int n_qubits, std::uint64_t basis_index) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw CapacityError("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    const std::uint64_t size = std::uint64_t{1} << n_qubits;
    if (basis_index >= size) throw std::invalid_argument("basis index out of range");
    amps_.assign(size, Complex{0.0, 0.0});
    amps_[basis_index] = Complex{1.0, 0.0};
}

std::uint64_t StateVector::index_bit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) throw std::invalid_argument("qubit index out of range");
    return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
}

void StateVector::apply(const Gate& g) {
    switch (g.kind) {
        case GateKind::H: {
            const std::uint64_t bit = index_bit(g.target);
            for (std::uint64_t base = 0; base < amps_.size(); base += bit << 1) {
                for (std::uint64_t off = 0; off < bit; ++off) {
                    Complex& a0 = amps_[base + off];
                    Complex& a1 = amps_[base + off + bit];
                    const Complex u = a0, v = a1;
                    a0 = (u + v) * kInvSqrt2;
                    a1 = (u - v) * kInvSqrt2;
                }
            }
            break;
        }
        case GateKind::Cnot: {
            const std::uint64_t cbit = index_bit(g.control);
            const std::uint64_t tbit = index_bit(g.target);
            for (std::uint64_t i = 0; i < amps_.size(); ++i)
                if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
            break;
        }
        case GateKind::Rz: {
            const std::uint64_t bit = index_bit(g.target);
            const Complex even = std::polar(1.0, -g.theta / 2.0);
            const Complex odd = std::polar(1.0, +g.theta / 2.0);
            for (std::uint64_t i = 0; i < amps_.size(); ++i)
                amps_[i] *= (i & bit) ? odd : even;
            break;
        }
    }
}

double StateVector::norm_sq() const {
    double sum = 0.0;
    for (const Complex& a : amps_) sum += std::norm(a);
    return sum;
}

StateVector run(const Circuit& c, GroupElement start) {
    if (start.dimension() != c.data_qubits())
        throw std::invalid_argument("start vertex dimension does not match circuit width");
    StateVector s(c.total_qubits(), std::uint64_t{start.index()} << 1);
    for (const auto& g : c.gates()) s.apply(g);
    return s;
}

double Distribution::at(GroupElement v) const {
    if (v.dimension() != n) throw std::invalid_argument("vertex dimension mismatch");
    return probs[v.index()];
}

Distribution measure_distribution(const StateVector& s) {
    const int n = s.qubit_count() - 1;
    if (n < 1) throw std::invalid_argument("state has no data register");

    const auto amps = s.amplitudes();
    double ancilla_mass = 0.0;
    for (std::uint64_t i = 1; i < amps.size(); i += 2) ancilla_mass += std::norm(amps[i]);
    if (ancilla_mass >= kAncillaTolerance)
        throw std::logic_error("ancilla not restored to |0>: residual mass " +
                               std::to_string(ancilla_mass));

    Distribution d;
    d.n = n;
    d.probs.resize(std::uint64_t{1} << n);
    for (std::uint64_t v = 0; v < d.probs.size(); ++v) d.probs[v] = std::norm(amps[v << 1]);
    return d;
}

std::map<std::string, std::uint64_t> sample(const Distribution& d, std::uint64_t shots,
                                            std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");

    std::vector<double> cumulative(d.probs.size());
    double acc = 0.0;
    for (std::size_t v = 0; v < d.probs.size(); ++v) {
        acc += d.probs[v];
        cumulative[v] = acc;
    }

    std::mt19937_64 rng(seed);
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        // 53-bit mantissa draw; avoids distribution objects for portability
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t v = std::min<std::size_t>(
            static_cast<std::size_t>(it - cumulative.begin()), d.probs.size() - 1);
        ++counts[GroupElement(d.n, static_cast<std::uint32_t>(v)).str()];
    }
    return counts;
}

std::string distribution_json(const Distribution& d) {
    nlohmann::json probs = nlohmann::json::object();
    for (std::uint64_t v = 0; v < d.probs.size(); ++v)
        if (d.probs[v] >= kJsonProbFloor)
            probs[GroupElement(d.n, static_cast<std::uint32_t>(v)).str()] = d.probs[v];
    return nlohmann::json{{"n", d.n}, {"probs", std::move(probs)}}.dump();
}

std::string counts_json(const Distribution& d, std::uint64_t shots, std::uint64_t seed) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [label, count] : sample(d, shots, seed)) counts[label] = count;
    return nlohmann::json{
        {"n", d.n}, {"shots", shots}, {"seed", seed}, {"counts", std::move(counts)}}.dump();
}

}  // namespace cubewalk
