#include "core/spectral.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace cubewalk {

namespace {

constexpr int kMaxUnitaryDimension = 10;

template <typename T>
void fwht_impl(std::span<T> a) {
    for (std::size_t len = 1; len < a.size(); len <<= 1)
        for (std::size_t i = 0; i < a.size(); i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                const T u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
}

// g[d] = 2^{-n} sum_y (-1)^{<d|y>} e^{-it lambda_y}; amp(v) = g[start xor v].
std::vector<std::complex<double>> phase_profile(const WeightFunction& f, double t) {
    const Spectrum spectrum = eigenvalues(f);
    std::vector<std::complex<double>> g(spectrum.lambda.size());
    for (std::size_t y = 0; y < g.size(); ++y)
        g[y] = std::polar(1.0, -t * static_cast<double>(spectrum.lambda[y]));
    fwht(std::span{g});
    const double scale = 1.0 / static_cast<double>(g.size());
    for (auto& amp : g) amp *= scale;
    return g;
}

}  // namespace

void fwht(std::span<std::int64_t> a) { fwht_impl(a); }
void fwht(std::span<std::complex<double>> a) { fwht_impl(a); }

Spectrum eigenvalues(const WeightFunction& f) {
    Spectrum spectrum;
    spectrum.n = f.dimension();
    spectrum.lambda.assign(std::size_t{1} << spectrum.n, 0);
    for (const auto& [bits, w] : f.entries()) spectrum.lambda[bits] = w;
    fwht(std::span{spectrum.lambda});
    return spectrum;
}

std::vector<std::complex<double>> evolve(const WeightFunction& f, GroupElement start, double t) {
    if (start.dimension() != f.dimension())
        throw std::invalid_argument("start vertex dimension does not match weight function");
    std::vector<std::complex<double>> g = phase_profile(f, t);
    std::vector<std::complex<double>> amps(g.size());
    for (std::size_t v = 0; v < amps.size(); ++v) amps[v] = g[start.index() ^ v];
    return amps;
}

ComplexMatrix full_unitary(const WeightFunction& f, double t) {
    if (f.dimension() > kMaxUnitaryDimension)
        throw CapacityError("full unitary is capped at n <= " +
                            std::to_string(kMaxUnitaryDimension));
    const std::vector<std::complex<double>> g = phase_profile(f, t);
    ComplexMatrix u(g.size());
    for (std::size_t col = 0; col < g.size(); ++col)
        for (std::size_t row = 0; row < g.size(); ++row) u.at(row, col) = g[row ^ col];
    return u;
}

}  // namespace cubewalk
