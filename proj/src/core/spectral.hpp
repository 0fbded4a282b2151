#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "core/group.hpp"

namespace cubewalk {

// Every adjacency matrix over Z_2^n is diagonalized by the Hadamard transform;
// the eigenvalues are the integer character sums
//   lambda_y = sum_{x in support} f(x) * (-1)^{<x|y>}.
// This path is exact and O(n * 2^n), independent of the circuit pipeline, and
// serves as the reference for every numerical check in the suite.
struct Spectrum {
    int n = 0;
    std::vector<std::int64_t> lambda;  // size 2^n, indexed by y
};

// In-place unnormalized Walsh-Hadamard butterfly:
// a[y] <- sum_x a[x] * (-1)^{popcount(x & y) mod 2}. Size must be a power of two.
void fwht(std::span<std::int64_t> a);
void fwht(std::span<std::complex<double>> a);

Spectrum eigenvalues(const WeightFunction& f);

// Amplitude vector of e^{-itA}|start> over all vertices:
// amp(v) = 2^{-n} * sum_y (-1)^{<start xor v|y>} e^{-it lambda_y}.
std::vector<std::complex<double>> evolve(const WeightFunction& f, GroupElement start, double t);

class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    std::complex<double>& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    std::complex<double> at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

private:
    std::size_t dim_;
    std::vector<std::complex<double>> a_;
};

// Full transition matrix e^{-itA}; column v is evolve(f, v, t). n <= 10.
ComplexMatrix full_unitary(const WeightFunction& f, double t);

}  // namespace cubewalk
