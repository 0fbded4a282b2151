#include "core/graph.hpp"

#include "core/errors.hpp"

namespace cubewalk {

namespace {

std::size_t checked_dense_size(int n) {
    if (n > AdjacencyMatrix::kMaxDenseDimension)
        throw CapacityError("dense matrices are capped at n <= " +
                            std::to_string(AdjacencyMatrix::kMaxDenseDimension) + ", got n = " +
                            std::to_string(n));
    return std::size_t{1} << n;
}

}  // namespace

AdjacencyMatrix build_adjacency(const WeightFunction& f) {
    const std::size_t size = checked_dense_size(f.dimension());
    IntMatrix m(size);
    for (std::size_t u = 0; u < size; ++u)
        for (const auto& [bits, w] : f.entries())
            m.at(u, u ^ bits) = w;
    return {f.dimension(), std::move(m)};
}

IntMatrix regular_representation(GroupElement x) {
    const std::size_t size = checked_dense_size(x.dimension());
    IntMatrix m(size);
    for (std::size_t y = 0; y < size; ++y) m.at(y ^ x.index(), y) = 1;
    return m;
}

bool decompose_check(const WeightFunction& f) {
    const std::size_t size = checked_dense_size(f.dimension());
    IntMatrix sum(size);
    for (const auto& x : f.support()) {
        const IntMatrix rho = regular_representation(x);
        const std::int64_t w = f.at(x);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) sum.at(r, c) += w * rho.at(r, c);
    }
    return sum == build_adjacency(f).matrix();
}

}  // namespace cubewalk
