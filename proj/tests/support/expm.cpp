#include "support/expm.hpp"

#include <cmath>

#include "support/test_util.hpp"

namespace testsupport {

cubewalk::ComplexMatrix expm(cubewalk::ComplexMatrix m) {
    const std::size_t dim = m.dim();

    // Scale until the series converges fast, then undo by repeated squaring.
    int squarings = 0;
    for (double norm = one_norm(m); norm > 0.25; norm /= 2.0) ++squarings;
    const double scale = std::ldexp(1.0, -squarings);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) *= scale;

    cubewalk::ComplexMatrix result = identity_matrix(dim);
    cubewalk::ComplexMatrix term = identity_matrix(dim);
    for (int k = 1; k <= 40; ++k) {
        term = multiply(term, m);
        const double inv_k = 1.0 / static_cast<double>(k);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                term.at(r, c) *= inv_k;
                result.at(r, c) += term.at(r, c);
            }
        if (one_norm(term) < 1e-22) break;
    }

    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

}  // namespace testsupport
