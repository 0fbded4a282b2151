#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "core/errors.hpp"
#include "core/graph.hpp"
#include "support/test_util.hpp"

using cubewalk::AdjacencyMatrix;
using cubewalk::build_adjacency;
using cubewalk::GroupElement;
using cubewalk::IntMatrix;
using cubewalk::WeightFunction;

TEST_CASE("adjacency matrix of the 4-cycle") {
    const auto f = WeightFunction::from_entries(2, {{"01", 1}, {"10", 1}});
    const AdjacencyMatrix a = build_adjacency(f);
    const std::int64_t expected[4][4] = {
        {0, 1, 1, 0},
        {1, 0, 0, 1},
        {1, 0, 0, 1},
        {0, 1, 1, 0},
    };
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v) REQUIRE(a.at(u, v) == expected[u][v]);
}

TEST_CASE("adjacency matrix of the weighted example") {
    const auto f = WeightFunction::from_entries(3, {{"001", 4}, {"011", 8}, {"101", 3}});
    const AdjacencyMatrix a = build_adjacency(f);
    const std::int64_t row0[8] = {0, 4, 0, 8, 0, 3, 0, 0};
    for (std::size_t v = 0; v < 8; ++v) REQUIRE(a.at(0, v) == row0[v]);
}

TEST_CASE("empty support gives the zero matrix") {
    const AdjacencyMatrix a = build_adjacency(WeightFunction(2));
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v) REQUIRE(a.at(u, v) == 0);
}

TEST_CASE("adjacency structure: symmetric, loop-free, circulant") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 5; ++n) {
        const auto f = testsupport::random_weight_function(rng, n);
        const AdjacencyMatrix a = build_adjacency(f);
        const std::size_t size = a.size();
        for (std::size_t u = 0; u < size; ++u) {
            REQUIRE(a.at(u, u) == 0);
            for (std::size_t v = 0; v < size; ++v) {
                REQUIRE(a.at(u, v) == a.at(v, u));
                REQUIRE(a.at(u, v) == a.at(0, u ^ v));
            }
        }
        // every row is a permutation of row 0
        for (std::size_t u = 1; u < size; ++u) {
            std::vector<std::int64_t> row0, row;
            for (std::size_t v = 0; v < size; ++v) {
                row0.push_back(a.at(0, v));
                row.push_back(a.at(u, v));
            }
            std::sort(row0.begin(), row0.end());
            std::sort(row.begin(), row.end());
            REQUIRE(row0 == row);
        }
    }
}

TEST_CASE("dense matrices are capacity limited") {
    REQUIRE_THROWS_AS(build_adjacency(WeightFunction(13)), cubewalk::CapacityError);
    REQUIRE_THROWS_AS(cubewalk::regular_representation(GroupElement::zero(13)),
                      cubewalk::CapacityError);
}

TEST_CASE("regular representation of the identity and single bits") {
    const IntMatrix id = cubewalk::regular_representation(GroupElement::parse("00"));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) REQUIRE(id.at(r, c) == (r == c ? 1 : 0));

    const IntMatrix x = cubewalk::regular_representation(GroupElement::parse("1"));
    REQUIRE(x.at(0, 0) == 0);
    REQUIRE(x.at(0, 1) == 1);
    REQUIRE(x.at(1, 0) == 1);
    REQUIRE(x.at(1, 1) == 0);

    const IntMatrix xx = cubewalk::regular_representation(GroupElement::parse("11"));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) REQUIRE(xx.at(r, c) == (r == (c ^ 3u) ? 1 : 0));
}

TEST_CASE("regular representation matches the Kronecker product of X factors") {
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        const GroupElement x(3, bits);
        // independent construction: kron of 2x2 blocks, leftmost bit outermost
        IntMatrix kron(1);
        kron.at(0, 0) = 1;
        for (int pos = 1; pos <= 3; ++pos) {
            const bool flip = x.bit(pos);
            IntMatrix next(kron.dim() * 2);
            for (std::size_t r = 0; r < kron.dim(); ++r)
                for (std::size_t c = 0; c < kron.dim(); ++c) {
                    if (kron.at(r, c) == 0) continue;
                    if (flip) {
                        next.at(2 * r + 1, 2 * c) = kron.at(r, c);
                        next.at(2 * r, 2 * c + 1) = kron.at(r, c);
                    } else {
                        next.at(2 * r, 2 * c) = kron.at(r, c);
                        next.at(2 * r + 1, 2 * c + 1) = kron.at(r, c);
                    }
                }
            kron = next;
        }
        REQUIRE(cubewalk::regular_representation(x) == kron);
    }
}

TEST_CASE("regular representations compose through xor") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint32_t> pick(0, 15);
    for (int trial = 0; trial < 20; ++trial) {
        const GroupElement x(4, pick(rng)), y(4, pick(rng));
        const IntMatrix rx = cubewalk::regular_representation(x);
        const IntMatrix ry = cubewalk::regular_representation(y);
        IntMatrix product(rx.dim());
        for (std::size_t r = 0; r < rx.dim(); ++r)
            for (std::size_t k = 0; k < rx.dim(); ++k) {
                if (rx.at(r, k) == 0) continue;
                for (std::size_t c = 0; c < rx.dim(); ++c)
                    product.at(r, c) += rx.at(r, k) * ry.at(k, c);
            }
        REQUIRE(product == cubewalk::regular_representation(x ^ y));
    }
}

TEST_CASE("adjacency matrix decomposes over the regular representation") {
    REQUIRE(cubewalk::decompose_check(WeightFunction::from_entries(2, {{"01", 1}, {"10", 1}})));
    REQUIRE(cubewalk::decompose_check(
        WeightFunction::from_entries(3, {{"001", 4}, {"011", 8}, {"101", 3}})));
    REQUIRE(cubewalk::decompose_check(WeightFunction(3)));

    std::mt19937_64 rng(23);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial)
            REQUIRE(cubewalk::decompose_check(testsupport::random_weight_function(rng, n)));
}
