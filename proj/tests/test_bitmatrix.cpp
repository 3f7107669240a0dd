#include <doctest.h>

#include <set>

#include "cssent/bitmatrix.hpp"
#include "cssent/errors.hpp"
#include "cssent/rng.hpp"

using namespace cssent;

namespace {

const BitMatrix kHamming = BitMatrix::from_rows({"1110100", "1101010", "1011001"});

// Independent oracle: dimension of the row span by exhaustive enumeration of
// all 2^rows combinations.
std::size_t span_dimension(const BitMatrix& m) {
    std::set<std::string> span;
    const std::size_t combos = std::size_t(1) << m.rows();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        BitVector v(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if ((mask >> r) & 1u) v ^= m.row(r);
        }
        span.insert(v.to_string());
    }
    std::size_t dim = 0;
    while ((std::size_t(1) << dim) < span.size()) ++dim;
    return dim;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (rng.coin()) m.set(r, c, true);
        }
    }
    return m;
}

} // namespace

TEST_CASE("rank: identity, zero, hamming") {
    CHECK(rank(BitMatrix::identity(4)) == 4);
    CHECK(rank(BitMatrix(3, 5)) == 0);
    CHECK(rank(kHamming) == span_dimension(kHamming));
    CHECK(rank(kHamming) == 3);
    CHECK(rank(BitMatrix()) == 0);
}

TEST_CASE("rref: duplicate rows, identity, hamming") {
    const RrefResult dup = rref(BitMatrix::from_rows({"11", "11"}));
    CHECK(dup.matrix == BitMatrix::from_rows({"11", "00"}));
    CHECK(dup.pivot_cols == std::vector<std::size_t>{0});

    const RrefResult id = rref(BitMatrix::identity(3));
    CHECK(id.matrix == BitMatrix::identity(3));
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1, 2});

    const RrefResult ham = rref(kHamming);
    CHECK(ham.pivot_cols == std::vector<std::size_t>{0, 1, 2});
    // Row space must be preserved: every combination of original rows lies in
    // the reduced span and vice versa.
    for (std::size_t mask = 0; mask < 8; ++mask) {
        BitVector v(7);
        for (std::size_t r = 0; r < 3; ++r) {
            if ((mask >> r) & 1u) v ^= kHamming.row(r);
        }
        CHECK(in_row_space(ham.matrix, v));
    }
    for (std::size_t r = 0; r < 3; ++r) CHECK(in_row_space(kHamming, ham.matrix.row(r)));
}

TEST_CASE("rref is idempotent in rank") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix m = random_matrix(1 + rng.bounded(8), 1 + rng.bounded(10), rng);
        CHECK(rank(m) == rank(rref(m).matrix));
    }
}

TEST_CASE("nullspace: identity, zero, hamming") {
    CHECK(nullspace_basis(BitMatrix::identity(5)).rows() == 0);
    const BitMatrix zero_null = nullspace_basis(BitMatrix(2, 3));
    CHECK(zero_null.rows() == 3);
    CHECK(zero_null == BitMatrix::identity(3));
    // 0 x n edge case: the basis is the full space.
    CHECK(nullspace_basis(BitMatrix(0, 4)) == BitMatrix::identity(4));

    const BitMatrix basis = nullspace_basis(kHamming);
    REQUIRE(basis.rows() == 4);
    // Multiply-back oracle over all 2^4 combinations.
    for (std::size_t mask = 0; mask < 16; ++mask) {
        BitVector v(7);
        for (std::size_t r = 0; r < 4; ++r) {
            if ((mask >> r) & 1u) v ^= basis.row(r);
        }
        CHECK_FALSE(kHamming.apply(v).any());
    }
}

TEST_CASE("rank-nullity over random matrices") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix m = random_matrix(rng.bounded(8), 1 + rng.bounded(12), rng);
        CHECK(rank(m) + nullspace_basis(m).rows() == m.cols());
    }
}

TEST_CASE("in_row_space") {
    CHECK(in_row_space(kHamming, BitVector(7)));
    CHECK(in_row_space(BitMatrix::identity(3), BitVector::from_string("101")));
    CHECK(in_row_space(kHamming, BitVector::from_string("0011110"))); // row0 ^ row1
    CHECK_THROWS_AS(in_row_space(kHamming, BitVector(6)), DimensionError);

    SplitMix64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix m = random_matrix(1 + rng.bounded(6), 1 + rng.bounded(10), rng);
        BitVector combo(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (rng.coin()) combo ^= m.row(r);
        }
        CHECK(in_row_space(m, combo));

        BitVector outside(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (rng.coin()) outside.set(c, true);
        }
        // Outside the span iff appending it grows the rank.
        BitMatrix extended = m;
        extended.append_row(outside);
        if (rank(extended) > rank(m)) CHECK_FALSE(in_row_space(m, outside));
    }
}

TEST_CASE("row addition is involutive") {
    SplitMix64 rng(44);
    BitMatrix m = random_matrix(4, 9, rng);
    const BitMatrix original = m;
    m.xor_rows(1, 3);
    m.xor_rows(1, 3);
    CHECK(m == original);
}

TEST_CASE("matrix text round trip and ragged rejection") {
    const std::string text = kHamming.to_text();
    CHECK(text.substr(0, 4) == "3 7\n");
    CHECK(BitMatrix::parse_text(text) == kHamming);
    CHECK_THROWS_AS(BitMatrix::parse_text(std::string("2 3\n101\n10\n")), IoError);
    CHECK_THROWS_AS(BitMatrix::parse_text(std::string("1 3\n1x1\n")), IoError);
}

TEST_CASE("RowSpace incremental membership") {
    RowSpace space(kHamming);
    CHECK(space.dimension() == 3);
    CHECK(space.contains(kHamming.row(0) ^ kHamming.row(2)));
    BitVector v = BitVector::from_string("1000000");
    CHECK_FALSE(space.contains(v));
    CHECK(space.insert(v));
    CHECK(space.contains(v));
    CHECK_FALSE(space.insert(v));
}
