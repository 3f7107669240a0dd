#include "cssent/entropy.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "cssent/errors.hpp"

namespace cssent {

Bipartition::Bipartition(std::size_t n_, std::vector<std::size_t> a) : n(n_), a_set(std::move(a)) {
    for (std::size_t i = 0; i < a_set.size(); ++i) {
        if (a_set[i] >= n) throw DimensionError("bipartition: index out of range");
        if (i > 0 && a_set[i] <= a_set[i - 1])
            throw DimensionError("bipartition: indices must be strictly increasing");
    }
}

std::vector<std::size_t> Bipartition::b_set() const {
    std::vector<bool> mask = a_mask();
    std::vector<std::size_t> b;
    b.reserve(n - a_set.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!mask[i]) b.push_back(i);
    }
    return b;
}

std::vector<bool> Bipartition::a_mask() const {
    std::vector<bool> mask(n, false);
    for (std::size_t q : a_set) mask[q] = true;
    return mask;
}

namespace {

BitMatrix with_constraints(const BitMatrix& hz, const LogicalConstraint* constraints) {
    if (!constraints || constraints->rows.rows() == 0) return hz;
    if (constraints->rows.cols() != hz.cols())
        throw DimensionError("constraints: width mismatch with hz");
    return vstack(hz, constraints->rows);
}

} // namespace

EntropyEvaluator::EntropyEvaluator(BitMatrix hz) : h_(std::move(hz)), rank_h_(rank(h_)) {}

EntropyEvaluator::EntropyEvaluator(BitMatrix hz, const LogicalConstraint& constraints)
    : h_(with_constraints(hz, &constraints)), rank_h_(rank(h_)) {}

std::size_t EntropyEvaluator::operator()(const Bipartition& part) const {
    if (part.n != h_.cols()) throw DimensionError("entropy: bipartition width mismatch");
    const std::size_t ra = rank(h_.select_columns(part.a_set));
    const std::size_t rb = rank(h_.select_columns(part.b_set()));
    return ra + rb - rank_h_;
}

std::size_t entropy_rank(const BitMatrix& hz, const Bipartition& part) {
    return EntropyEvaluator(hz)(part);
}

std::size_t entropy_rank(const BitMatrix& hz, const Bipartition& part,
                         const LogicalConstraint& constraints) {
    return EntropyEvaluator(hz, constraints)(part);
}

BitMatrix CanonicalBlocks::reassemble() const {
    const std::size_t da = deleted_a.size();
    const std::size_t db = deleted_b.size();
    const std::size_t live = wa.rows();
    const std::size_t la = live_a.size();
    const std::size_t lb = live_b.size();
    BitMatrix out(da + live + db, n);
    // Column layout: [deleted_a | live_a | live_b | deleted_b].
    for (std::size_t r = 0; r < da; ++r) {
        out.set(r, r, true);
        for (std::size_t c = 0; c < la; ++c) {
            if (tilde_wa.get(r, c)) out.set(r, da + c, true);
        }
    }
    for (std::size_t r = 0; r < live; ++r) {
        for (std::size_t c = 0; c < la; ++c) {
            if (wa.get(r, c)) out.set(da + r, da + c, true);
        }
        for (std::size_t c = 0; c < lb; ++c) {
            if (wb.get(r, c)) out.set(da + r, da + la + c, true);
        }
    }
    for (std::size_t r = 0; r < db; ++r) {
        for (std::size_t c = 0; c < lb; ++c) {
            if (tilde_wb.get(r, c)) out.set(da + live + r, da + la + c, true);
        }
        out.set(da + live + r, da + la + lb + r, true);
    }
    return out;
}

CanonicalBlocks canonicalize(const BitMatrix& hz, const Bipartition& part) {
    if (part.n != hz.cols()) throw DimensionError("canonicalize: bipartition width mismatch");
    const std::vector<bool> in_a = part.a_mask();
    const std::size_t n = hz.cols();

    // Work on an independent row basis; row space is all that matters.
    const RrefResult reduced = rref(hz);
    std::vector<BitVector> rows;
    rows.reserve(reduced.pivot_cols.size());
    for (std::size_t r = 0; r < reduced.pivot_cols.size(); ++r)
        rows.push_back(reduced.matrix.row(r));

    enum class State { Live, DeletedA, DeletedB };
    std::vector<State> state(rows.size(), State::Live);
    std::vector<std::size_t> order_a, order_b; // row indices in deletion order
    CanonicalBlocks blocks;
    blocks.n = n;

    auto support_side = [&](const BitVector& v, bool want_a) {
        // True when v is nonzero and supported entirely on one side.
        bool any = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!v.get(q)) continue;
            any = true;
            if (in_a[q] != want_a) return false;
        }
        return any;
    };
    auto lowest_set = [&](const BitVector& v) {
        for (std::size_t q = 0; q < n; ++q) {
            if (v.get(q)) return q;
        }
        throw Error("canonicalize: empty row"); // unreachable, rows independent
    };
    auto delete_row = [&](std::size_t ri, bool to_a) {
        const std::size_t q = lowest_set(rows[ri]);
        for (std::size_t rj = 0; rj < rows.size(); ++rj) {
            if (rj != ri && rows[rj].get(q)) rows[rj] ^= rows[ri];
        }
        if (to_a) {
            state[ri] = State::DeletedA;
            order_a.push_back(ri);
            blocks.deleted_a.push_back(q);
        } else {
            state[ri] = State::DeletedB;
            order_b.push_back(ri);
            blocks.deleted_b.push_back(q);
        }
    };

    // Step 1: cycles fully inside A, then fully inside B.
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        if (state[ri] == State::Live && support_side(rows[ri], true)) delete_row(ri, true);
    }
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        if (state[ri] == State::Live && support_side(rows[ri], false)) delete_row(ri, false);
    }

    // Step 2: boundary cycles. Eliminating on one side's columns materializes
    // every combination of live rows supported on the other side only.
    auto eliminate_on = [&](bool side_a) {
        std::vector<bool> used(rows.size(), false);
        for (std::size_t c = 0; c < n; ++c) {
            if (in_a[c] != side_a) continue;
            std::size_t pivot = rows.size();
            for (std::size_t ri = 0; ri < rows.size(); ++ri) {
                if (state[ri] == State::Live && !used[ri] && rows[ri].get(c)) {
                    pivot = ri;
                    break;
                }
            }
            if (pivot == rows.size()) continue;
            used[pivot] = true;
            for (std::size_t ri = 0; ri < rows.size(); ++ri) {
                if (ri != pivot && state[ri] == State::Live && rows[ri].get(c))
                    rows[ri] ^= rows[pivot];
            }
        }
    };
    eliminate_on(true); // boundary of A: combinations supported only on B
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        if (state[ri] == State::Live && support_side(rows[ri], false)) delete_row(ri, false);
    }
    eliminate_on(false); // boundary of B: combinations supported only on A
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        if (state[ri] == State::Live && support_side(rows[ri], true)) delete_row(ri, true);
    }

    // Assemble blocks.
    std::vector<bool> deleted(n, false);
    for (std::size_t q : blocks.deleted_a) deleted[q] = true;
    for (std::size_t q : blocks.deleted_b) deleted[q] = true;
    for (std::size_t q = 0; q < n; ++q) {
        if (deleted[q]) continue;
        (in_a[q] ? blocks.live_a : blocks.live_b).push_back(q);
    }
    blocks.col_perm = blocks.deleted_a;
    blocks.col_perm.insert(blocks.col_perm.end(), blocks.live_a.begin(), blocks.live_a.end());
    blocks.col_perm.insert(blocks.col_perm.end(), blocks.live_b.begin(), blocks.live_b.end());
    blocks.col_perm.insert(blocks.col_perm.end(), blocks.deleted_b.begin(),
                           blocks.deleted_b.end());

    std::vector<std::size_t> live_rows;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        if (state[ri] == State::Live) live_rows.push_back(ri);
    }
    blocks.row_perm = order_a;
    blocks.row_perm.insert(blocks.row_perm.end(), live_rows.begin(), live_rows.end());
    blocks.row_perm.insert(blocks.row_perm.end(), order_b.begin(), order_b.end());

    auto gather = [&](const std::vector<std::size_t>& row_ids,
                      const std::vector<std::size_t>& col_ids) {
        BitMatrix out(row_ids.size(), col_ids.size());
        for (std::size_t i = 0; i < row_ids.size(); ++i) {
            for (std::size_t j = 0; j < col_ids.size(); ++j) {
                if (rows[row_ids[i]].get(col_ids[j])) out.set(i, j, true);
            }
        }
        return out;
    };
    blocks.wa = gather(live_rows, blocks.live_a);
    blocks.wb = gather(live_rows, blocks.live_b);
    blocks.tilde_wa = gather(order_a, blocks.live_a);
    blocks.tilde_wb = gather(order_b, blocks.live_b);
    return blocks;
}

namespace {

Spectrum oracle_impl(const CssCode& code, const Bipartition& part,
                     const LogicalConstraint* constraints) {
    if (part.n != code.n) throw DimensionError("oracle: bipartition width mismatch");
    if (code.n > 14) throw SizeError("oracle: n > 14 exceeds the dense-state budget");
    const BitMatrix h = with_constraints(code.hz, constraints);

    const BitMatrix basis = nullspace_basis(h);
    const std::size_t dim = basis.rows();
    const std::vector<std::size_t> b_set = part.b_set();
    const std::size_t rows_a = std::size_t(1) << part.n_a();
    const std::size_t cols_b = std::size_t(1) << b_set.size();

    auto index_of = [](const BitVector& z, const std::vector<std::size_t>& qubits) {
        std::size_t idx = 0;
        for (std::size_t q : qubits) idx = (idx << 1) | static_cast<std::size_t>(z.get(q));
        return idx;
    };

    // Amplitude matrix M(a, b) of the equal superposition over the codeword
    // space; Gray-code enumeration touches one basis row per step.
    Eigen::MatrixXd amp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_a),
                                                static_cast<Eigen::Index>(cols_b));
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(std::size_t(1) << dim));
    BitVector z(code.n);
    amp(static_cast<Eigen::Index>(index_of(z, part.a_set)),
        static_cast<Eigen::Index>(index_of(z, b_set))) += amplitude;
    for (std::size_t g = 1; g < (std::size_t(1) << dim); ++g) {
        std::size_t bit = 0;
        while (!((g >> bit) & 1u)) ++bit;
        z ^= basis.row(bit);
        amp(static_cast<Eigen::Index>(index_of(z, part.a_set)),
            static_cast<Eigen::Index>(index_of(z, b_set))) += amplitude;
    }

    // Eigenvalues of rho_A are the squared singular values of M. JacobiSVD:
    // BDCSVD loses mass on some small degenerate-spectrum inputs (observed on
    // 16x16 rank-8 amplitude matrices) and these matrices stay tiny anyway.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(amp);
    Spectrum spectrum;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double lambda = svd.singularValues()(i) * svd.singularValues()(i);
        if (lambda > 1e-12) spectrum.eigenvalues.push_back(lambda);
    }
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), std::greater<>());
    return spectrum;
}

} // namespace

Spectrum dense_oracle(const CssCode& code, const Bipartition& part) {
    return oracle_impl(code, part, nullptr);
}

Spectrum dense_oracle(const CssCode& code, const Bipartition& part,
                      const LogicalConstraint& constraints) {
    return oracle_impl(code, part, &constraints);
}

double entropy_bits(const Spectrum& spectrum) {
    double s = 0.0;
    for (double lambda : spectrum.eigenvalues) {
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return s;
}

std::size_t entropy_codespace_identity(const BitMatrix& hz, const Bipartition& part) {
    if (part.n != hz.cols()) throw DimensionError("entropy: bipartition width mismatch");
    const std::size_t dim_c = nullspace_basis(hz).rows();
    const std::size_t dim_ca = nullspace_basis(hz.select_columns(part.a_set)).rows();
    const std::size_t dim_cb = nullspace_basis(hz.select_columns(part.b_set())).rows();
    return dim_c - dim_ca - dim_cb;
}

} // namespace cssent
