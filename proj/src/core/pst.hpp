#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/group.hpp"
#include "core/statevector.hpp"

namespace cubewalk {

// The canonical instant: sigma != 0 predicts a perfect transfer at pi/2,
// sigma = 0 predicts periodicity with that period.
inline constexpr double kTransferTime = std::numbers::pi / 2.0;

enum class Verdict { Pst, Periodic };
enum class Backend { Circuit, Oracle };

struct PstReport {
    GroupElement sigma;
    Verdict verdict;
    double tau = kTransferTime;
    GroupElement source;
    GroupElement target;
    // Filled by confirm().
    std::optional<double> fidelity;
    std::optional<std::complex<double>> global_phase;
};

// Prediction from the parity criterion alone: source 0, target sigma.
PstReport predict(const WeightFunction& f);

// Evolves |source> to tau on the chosen backend and fills fidelity (the
// modulus of the amplitude at the target) and the global phase. A fidelity
// below 1 - 1e-9 throws VerificationError carrying the full distribution:
// the criterion is unconditional for integer weights, so this is a bug signal.
PstReport confirm(const WeightFunction& f, PstReport report, Backend backend);

// The perfect matching {u, u xor sigma} over all 2^n vertices, ascending by
// the smaller member. Requires sigma != 0.
std::vector<std::pair<GroupElement, GroupElement>> pst_pairs(const WeightFunction& f);

// Sigma as a bit string, the verdict, tau, endpoints, and (when present)
// fidelity and global_phase as {"re":..., "im":...}.
std::string report_json(const PstReport& r,
                        const std::vector<std::pair<GroupElement, GroupElement>>* pairs = nullptr);

struct VerifyOptions {
    double tolerance = 1e-9;
    // Test hook: perturbs one rotation angle after synthesis so the failure
    // path can be exercised end to end.
    bool corrupt_circuit = false;
};

struct VerifyResult {
    PstReport prediction;
    double circuit_fidelity = 0.0;
    double oracle_fidelity = 0.0;
    double max_backend_deviation = 0.0;  // max |amp_circuit - amp_oracle| over vertices
    bool ok = false;
    Distribution circuit_distribution;
    Distribution oracle_distribution;
};

// Runs both backends from the predicted source at tau and cross-checks them
// amplitude by amplitude. The circuit backend is capped at n <= 20.
VerifyResult verify(const WeightFunction& f, const VerifyOptions& options = {});

// Distributions of both backends are included when the check failed.
std::string verify_json(const VerifyResult& r);

}  // namespace cubewalk
