#include <doctest.h>

#include <cmath>

#include "cssent/entropy.hpp"
#include "cssent/errors.hpp"
#include "cssent/rng.hpp"
#include "cssent/sampling.hpp"
#include "fixtures.hpp"

using namespace cssent;
using namespace cssent::fixtures;

namespace {

std::vector<std::size_t> all_qubits(std::size_t n) {
    std::vector<std::size_t> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = i;
    return a;
}

} // namespace

TEST_CASE("entropy_rank basics") {
    const CssCode toric3 = build_toric({3});
    CHECK(entropy_rank(toric3.hz, Bipartition(18, toric_single_qubit(3))) == 1);
    CHECK(entropy_rank(toric3.hz, Bipartition(18, {})) == 0);
    CHECK(entropy_rank(toric3.hz, Bipartition(18, all_qubits(18))) == 0);
    CHECK_THROWS_AS(entropy_rank(toric3.hz, Bipartition(17, {0})), DimensionError);
}

TEST_CASE("appendix worked values for |00>_L") {
    for (std::size_t d = 3; d <= 5; ++d) {
        const CssCode code = build_toric({d});
        const LogicalConstraint both{toric_logical_z(d)};
        const std::size_t n = code.n;
        CHECK(entropy_rank(code.hz, Bipartition(n, toric_single_qubit(d)), both) == 1);
        CHECK(entropy_rank(code.hz, Bipartition(n, toric_two_adjacent(d)), both) == 2);
        CHECK(entropy_rank(code.hz, Bipartition(n, toric_chain(d)), both) == d - 1);
        CHECK(entropy_rank(code.hz, Bipartition(n, toric_ladder(d)), both) == d);
        CHECK(entropy_rank(code.hz, Bipartition(n, toric_cross(d)), both) == 2 * d - 1);
        CHECK(entropy_rank(code.hz, Bipartition(n, toric_all_vertical(d)), both) ==
              (d - 1) * (d - 1));
    }
}

TEST_CASE("appendix values cross-checked against the oracle at d=2") {
    const CssCode code = build_toric({2});
    const LogicalConstraint both{toric_logical_z(2)};
    const struct {
        std::vector<std::size_t> a;
        std::size_t expect;
    } cases[] = {
        {toric_single_qubit(2), 1},
        {toric_two_adjacent(2), 2},
        {toric_chain(2), 1},        // d - 1
        {toric_ladder(2), 2},       // d
        {toric_cross(2), 3},        // 2d - 1
        {toric_all_vertical(2), 1}, // (d-1)^2
    };
    for (const auto& tc : cases) {
        const Bipartition part(8, tc.a);
        CHECK(entropy_rank(code.hz, part, both) == tc.expect);
        const double oracle = entropy_bits(dense_oracle(code, part, both));
        CHECK(std::abs(oracle - static_cast<double>(tc.expect)) < 1e-9);
    }
}

TEST_CASE("canonicalize: empty, single qubit, structure") {
    const CssCode toric3 = build_toric({3});

    const CanonicalBlocks empty = canonicalize(toric3.hz, Bipartition(18, {}));
    CHECK(empty.wa.rows() == 0);
    CHECK(empty.wb.rows() == 0);
    CHECK(empty.live_a.empty());

    const Bipartition single(18, toric_single_qubit(3));
    const CanonicalBlocks blocks = canonicalize(toric3.hz, single);
    CHECK(rank(blocks.wa) == 1);
    CHECK(rank(blocks.wb) == 1);
    CHECK(rank(blocks.wa) == entropy_rank(toric3.hz, single));
}

TEST_CASE("canonicalize preserves the row space") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const CssCode code = random_css(4 + rng.bounded(7), rng.next());
        const Bipartition part = random_subsystem(code.n, rng.bounded(code.n + 1), rng.next());
        const CanonicalBlocks blocks = canonicalize(code.hz, part);

        // Reassembled block matrix vs column-permuted input: same row space.
        const BitMatrix reassembled = blocks.reassemble();
        const BitMatrix permuted = code.hz.select_columns(blocks.col_perm);
        CHECK(rank(reassembled) == rank(permuted));
        CHECK(rank(vstack(reassembled, permuted)) == rank(permuted));

        // Deleted columns carry single-one identity structure.
        const std::size_t live = blocks.wa.rows();
        for (std::size_t i = 0; i < blocks.deleted_a.size(); ++i)
            CHECK(reassembled.col_weight(i) == 1);
        for (std::size_t i = 0; i < blocks.deleted_b.size(); ++i) {
            const std::size_t col = blocks.deleted_a.size() + blocks.live_a.size() +
                                    blocks.live_b.size() + i;
            CHECK(reassembled.col_weight(col) == 1);
        }

        // Eq-9 consistency on every tested input.
        const std::size_t s = entropy_rank(code.hz, part);
        CHECK(rank(blocks.wa) == s);
        CHECK(rank(blocks.wb) == s);
        CHECK(blocks.wa.rows() == live);
        CHECK(rank(blocks.wa) == live);
    }
}

TEST_CASE("dense oracle: trivial and uniform spectra") {
    const CssCode toric2 = build_toric({2});

    const Spectrum empty_a = dense_oracle(toric2, Bipartition(8, {}));
    REQUIRE(empty_a.eigenvalues.size() == 1);
    CHECK(std::abs(empty_a.eigenvalues[0] - 1.0) < 1e-12);
    CHECK(entropy_bits(empty_a) == 0.0);

    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Bipartition part = random_subsystem(8, rng.bounded(9), rng.next());
        const Spectrum spectrum = dense_oracle(toric2, part);
        const std::size_t s = entropy_rank(toric2.hz, part);
        // Eigenvalues are uniform: 2^S values, each 2^-S.
        REQUIRE(spectrum.eigenvalues.size() == (std::size_t(1) << s));
        double sum = 0.0;
        for (double lambda : spectrum.eigenvalues) {
            CHECK(std::abs(lambda - std::pow(2.0, -double(s))) < 1e-9);
            sum += lambda;
        }
        CHECK(std::abs(sum - 1.0) < 1e-9);
    }

    CssCode big;
    big.n = 15;
    big.hz = BitMatrix(1, 15);
    big.hx = BitMatrix(0, 15);
    CHECK_THROWS_AS(dense_oracle(big, Bipartition(15, {0})), SizeError);
}

TEST_CASE("logical-basis invariance at toric d=2") {
    // Appending the logical rows fixes the |00>_L sector; the rank result and
    // the oracle agree for every bipartition sampled.
    const CssCode code = build_toric({2});
    const LogicalConstraint both{toric_logical_z(2)};
    SplitMix64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const Bipartition part = random_subsystem(8, rng.bounded(9), rng.next());
        const std::size_t by_rank = entropy_rank(code.hz, part, both);
        const double by_oracle = entropy_bits(dense_oracle(code, part, both));
        CHECK(std::abs(by_oracle - double(by_rank)) < 1e-9);
    }
}

TEST_CASE("codespace identity route") {
    const CssCode toric3 = build_toric({3});
    CHECK(entropy_codespace_identity(toric3.hz, Bipartition(18, {})) == 0);
    CHECK(entropy_codespace_identity(toric3.hz, Bipartition(18, toric_single_qubit(3))) == 1);

    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const CssCode code = random_css(6, rng.next());
        const Bipartition part = random_subsystem(6, rng.bounded(7), rng.next());
        CHECK(entropy_codespace_identity(code.hz, part) == entropy_rank(code.hz, part));
    }
}

TEST_CASE("entropy symmetry and bounds") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const CssCode code = random_css(4 + rng.bounded(9), rng.next());
        const Bipartition part = random_subsystem(code.n, rng.bounded(code.n + 1), rng.next());
        const Bipartition flipped(code.n, part.b_set());
        const std::size_t s = entropy_rank(code.hz, part);
        CHECK(s == entropy_rank(code.hz, flipped));
        CHECK(s <= std::min(part.n_a(), code.n - part.n_a()));
    }
}

TEST_CASE("hamming oracle value") {
    // The duplication-figure bipartition is pinned in test_graph; here the
    // oracle confirms an S_A = 2 split directly.
    const CssCode hamming = hamming_css();
    const Bipartition part(7, {0, 1});
    CHECK(entropy_rank(hamming.hz, part) == 2);
    CHECK(std::abs(entropy_bits(dense_oracle(hamming, part)) - 2.0) < 1e-9);
}
