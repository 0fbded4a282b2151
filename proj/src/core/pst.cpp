#include "core/pst.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "core/circuit.hpp"
#include "core/errors.hpp"
#include "core/spectral.hpp"

namespace cubewalk {

namespace {

constexpr double kFidelityThreshold = 1.0 - 1e-9;
constexpr int kMaxCircuitDimension = 20;

// Amplitudes over vertices from |start> at time t via the requested backend.
std::vector<Complex> backend_amplitudes(const WeightFunction& f, GroupElement start, double t,
                                        Backend backend, bool corrupt_circuit = false) {
    if (backend == Backend::Oracle) return evolve(f, start, t);

    if (f.dimension() > kMaxCircuitDimension)
        throw CapacityError("circuit backend is capped at n <= " +
                            std::to_string(kMaxCircuitDimension));
    Circuit c = synthesize_walk(f, t);
    if (corrupt_circuit) {
        Circuit bad(c.data_qubits());
        for (const auto& g : c.gates())
            bad.append(g.kind == GateKind::Rz ? Gate::rz(g.target, g.theta + 0.7) : g);
        c = std::move(bad);
    }
    const StateVector s = run(c, start);
    std::vector<Complex> amps(std::size_t{1} << f.dimension());
    for (std::size_t v = 0; v < amps.size(); ++v) amps[v] = s.amplitude(v << 1);
    return amps;
}

Distribution to_distribution(int n, const std::vector<Complex>& amps) {
    Distribution d;
    d.n = n;
    d.probs.resize(amps.size());
    for (std::size_t v = 0; v < amps.size(); ++v) d.probs[v] = std::norm(amps[v]);
    return d;
}

nlohmann::json report_to_json(const PstReport& r) {
    nlohmann::json out{{"sigma", r.sigma.str()},
                       {"verdict", r.verdict == Verdict::Pst ? "PST" : "PERIODIC"},
                       {"tau", r.tau},
                       {"source", r.source.str()},
                       {"target", r.target.str()}};
    if (r.fidelity) out["fidelity"] = *r.fidelity;
    if (r.global_phase)
        out["global_phase"] = {{"re", r.global_phase->real()}, {"im", r.global_phase->imag()}};
    return out;
}

}  // namespace

PstReport predict(const WeightFunction& f) {
    const GroupElement s = sigma(f);
    PstReport report{s, s.is_zero() ? Verdict::Periodic : Verdict::Pst, kTransferTime,
                     GroupElement::zero(f.dimension()), s, std::nullopt, std::nullopt};
    return report;
}

PstReport confirm(const WeightFunction& f, PstReport report, Backend backend) {
    const std::vector<Complex> amps = backend_amplitudes(f, report.source, report.tau, backend);
    const GroupElement probe =
        report.verdict == Verdict::Pst ? report.target : report.source;
    const Complex amp = amps[probe.index()];
    const double fidelity = std::abs(amp);

    if (fidelity < kFidelityThreshold)
        throw VerificationError(
            "fidelity " + std::to_string(fidelity) + " at vertex " + probe.str() +
                " is below threshold; the parity criterion guarantees a perfect transfer",
            distribution_json(to_distribution(f.dimension(), amps)));

    report.fidelity = fidelity;
    report.global_phase = amp / fidelity;
    return report;
}

std::vector<std::pair<GroupElement, GroupElement>> pst_pairs(const WeightFunction& f) {
    const GroupElement s = sigma(f);
    if (s.is_zero())
        throw std::invalid_argument("sigma is zero: the graph is periodic, there are no pairs");

    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    const std::uint32_t size = std::uint32_t{1} << f.dimension();
    pairs.reserve(size / 2);
    for (std::uint32_t u = 0; u < size; ++u) {
        const std::uint32_t v = u ^ s.index();
        if (u < v) pairs.emplace_back(GroupElement(f.dimension(), u), GroupElement(f.dimension(), v));
    }
    return pairs;
}

std::string report_json(const PstReport& r,
                        const std::vector<std::pair<GroupElement, GroupElement>>* pairs) {
    nlohmann::json out = report_to_json(r);
    if (pairs) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& [u, v] : *pairs) list.push_back({u.str(), v.str()});
        out["pairs"] = std::move(list);
    }
    return out.dump();
}

VerifyResult verify(const WeightFunction& f, const VerifyOptions& options) {
    VerifyResult result{predict(f), 0.0, 0.0, 0.0, false, {}, {}};
    const PstReport& p = result.prediction;

    const std::vector<Complex> circuit_amps =
        backend_amplitudes(f, p.source, p.tau, Backend::Circuit, options.corrupt_circuit);
    const std::vector<Complex> oracle_amps =
        backend_amplitudes(f, p.source, p.tau, Backend::Oracle);

    const GroupElement probe = p.verdict == Verdict::Pst ? p.target : p.source;
    result.circuit_fidelity = std::abs(circuit_amps[probe.index()]);
    result.oracle_fidelity = std::abs(oracle_amps[probe.index()]);
    for (std::size_t v = 0; v < circuit_amps.size(); ++v)
        result.max_backend_deviation =
            std::max(result.max_backend_deviation, std::abs(circuit_amps[v] - oracle_amps[v]));

    result.ok = result.circuit_fidelity >= 1.0 - options.tolerance &&
                result.oracle_fidelity >= 1.0 - options.tolerance &&
                result.max_backend_deviation <= options.tolerance;
    result.circuit_distribution = to_distribution(f.dimension(), circuit_amps);
    result.oracle_distribution = to_distribution(f.dimension(), oracle_amps);
    return result;
}

std::string verify_json(const VerifyResult& r) {
    nlohmann::json out{{"prediction", report_to_json(r.prediction)},
                       {"circuit_fidelity", r.circuit_fidelity},
                       {"oracle_fidelity", r.oracle_fidelity},
                       {"max_backend_deviation", r.max_backend_deviation},
                       {"ok", r.ok}};
    if (!r.ok) {
        out["circuit_distribution"] = nlohmann::json::parse(distribution_json(r.circuit_distribution));
        out["oracle_distribution"] = nlohmann::json::parse(distribution_json(r.oracle_distribution));
    }
    return out.dump();
}

}  // namespace cubewalk
