#pragma once

#include <cstdint>
#include <vector>

#include "core/group.hpp"

namespace cubewalk {

// Dense integer matrix indexed by vertex pairs. Used for the small-n
// validation paths only; the spectral path and the simulator scale further.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}

    std::size_t dim() const { return dim_; }
    std::int64_t& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<std::int64_t> a_;
};

// A[u][v] = f(u xor v): symmetric, zero diagonal, circulant over Z_2^n.
class AdjacencyMatrix {
public:
    static constexpr int kMaxDenseDimension = 12;

    AdjacencyMatrix(int n, IntMatrix m) : n_(n), m_(std::move(m)) {}

    int dimension() const { return n_; }
    std::size_t size() const { return m_.dim(); }
    std::int64_t at(std::size_t u, std::size_t v) const { return m_.at(u, v); }
    const IntMatrix& matrix() const { return m_; }

private:
    int n_;
    IntMatrix m_;
};

AdjacencyMatrix build_adjacency(const WeightFunction& f);

// Permutation matrix of y -> x xor y; equals the Kronecker product of X
// factors selected by the bits of x.
IntMatrix regular_representation(GroupElement x);

// Exact integer check that the adjacency matrix equals the weighted sum of
// regular representations over the support.
bool decompose_check(const WeightFunction& f);

}  // namespace cubewalk
