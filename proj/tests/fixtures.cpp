#include "fixtures.hpp"

#include <algorithm>
#include <set>

#include "cssent/rng.hpp"

namespace cssent::fixtures {

CssCode hamming_css() {
    const BitMatrix h = BitMatrix::from_rows({"1110100", "1101010", "1011001"});
    CssCode code;
    code.name = "hamming713";
    code.n = 7;
    code.hx = h;
    code.hz = h;
    code.k = 1;
    return code;
}

CssCode random_css(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t z_rows = 1 + rng.bounded(n / 2);
    BitMatrix hz(0, n);
    for (std::size_t r = 0; r < z_rows; ++r) {
        BitVector row(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (rng.coin()) row.set(c, true);
        }
        if (row.any()) hz.append_row(row);
    }
    if (hz.rows() == 0) {
        BitVector row(n);
        row.set(0, true);
        row.set(1 % n, true);
        hz.append_row(row);
    }

    const BitMatrix candidates = nullspace_basis(hz);
    const std::size_t x_rows = candidates.rows() == 0 ? 0 : 1 + rng.bounded(candidates.rows());
    BitMatrix hx(0, n);
    for (std::size_t r = 0; r < x_rows; ++r) {
        BitVector row(n);
        for (std::size_t b = 0; b < candidates.rows(); ++b) {
            if (rng.coin()) row ^= candidates.row(b);
        }
        if (row.any()) hx.append_row(row);
    }
    if (hx.rows() == 0 && candidates.rows() > 0) hx.append_row(candidates.row(0));

    CssCode code;
    code.name = "random_n" + std::to_string(n) + "_s" + std::to_string(seed);
    code.n = n;
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    code.k = n - rank(code.hx) - rank(code.hz);
    return code;
}

std::vector<std::size_t> toric_single_qubit(std::size_t d) {
    return {toric_h_edge(d, 0, 0)};
}

std::vector<std::size_t> toric_two_adjacent(std::size_t d) {
    // Both edges belong to plaquette (0,0).
    std::vector<std::size_t> a{toric_h_edge(d, 0, 0), toric_v_edge(d, 0, 0)};
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<std::size_t> toric_chain(std::size_t d) {
    std::vector<std::size_t> a;
    for (std::size_t j = 0; j < d; ++j) a.push_back(toric_h_edge(d, 0, j));
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<std::size_t> toric_ladder(std::size_t d) {
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i < d; ++i) a.push_back(toric_h_edge(d, i, 0));
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<std::size_t> toric_cross(std::size_t d) {
    // Horizontal chain through row 0 plus a vertical bar at column 0: the
    // connector v(0,0) and the ladder rungs h(i,0) below it. A's edge set has
    // one independent cycle (the chain), so its spanning forest is obtained
    // by removing a single edge, and no X-star is fully enclosed; the
    // entanglement entropy for |00>_L is 2d-1.
    std::set<std::size_t> a;
    for (std::size_t j = 0; j < d; ++j) a.insert(toric_h_edge(d, 0, j));
    a.insert(toric_v_edge(d, 0, 0));
    for (std::size_t i = 1; i < d; ++i) a.insert(toric_h_edge(d, i, 0));
    return {a.begin(), a.end()};
}

std::vector<std::size_t> toric_all_vertical(std::size_t d) {
    std::vector<std::size_t> a;
    for (std::size_t q = d * d; q < 2 * d * d; ++q) a.push_back(q);
    return a;
}

std::vector<std::size_t> toric_rectangle_region(std::size_t d, std::size_t a, std::size_t b) {
    // Dual vertices = plaquettes (i,j), 0 <= i < a, 0 <= j < b. Edge between
    // vertically adjacent plaquettes (i,j),(i+1,j) is h_edge(i+1, j); between
    // horizontally adjacent ones it is v_edge(i, j+1).
    std::set<std::size_t> edges;
    for (std::size_t i = 0; i + 1 < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) edges.insert(toric_h_edge(d, i + 1, j));
    }
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j + 1 < b; ++j) edges.insert(toric_v_edge(d, i, j + 1));
    }
    return {edges.begin(), edges.end()};
}

std::size_t toric_boundary_stabilizers(const CssCode& code, const std::vector<std::size_t>& a_set) {
    std::vector<bool> in_a(code.n, false);
    for (std::size_t q : a_set) in_a[q] = true;
    std::size_t m = 0;
    for (std::size_t r = 0; r < code.hz.rows(); ++r) {
        bool touches_a = false, touches_b = false;
        for (std::size_t c = 0; c < code.n; ++c) {
            if (!code.hz.get(r, c)) continue;
            (in_a[c] ? touches_a : touches_b) = true;
        }
        if (touches_a && touches_b) ++m;
    }
    return m;
}

} // namespace cssent::fixtures
