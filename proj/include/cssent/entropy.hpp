#pragma once

#include <vector>

#include "cssent/bitmatrix.hpp"
#include "cssent/css_code.hpp"

namespace cssent {

/// Ordered split of n qubits into subsystem A and its implicit complement B.
struct Bipartition {
    std::size_t n = 0;
    /// Strictly increasing qubit indices, all < n.
    std::vector<std::size_t> a_set;

    Bipartition() = default;
    Bipartition(std::size_t n, std::vector<std::size_t> a);

    std::size_t n_a() const { return a_set.size(); }
    std::vector<std::size_t> b_set() const;
    std::vector<bool> a_mask() const;
};

/// Logical Pauli-Z rows (or products of logical-Z rows) appended to hz to fix
/// logical eigenvalues. Each row must commute with every hx row and lie
/// outside rowspace(hz); the eigenvalue sign does not enter the rank
/// computation, so fixing any logical basis state is equivalent.
struct LogicalConstraint {
    BitMatrix rows;
};

/// Entanglement entropy in bits via S_A = rank(H_A) + rank(H_B) - rank(H),
/// where H is hz plus any constraint rows and H_A/H_B its column restrictions.
std::size_t entropy_rank(const BitMatrix& hz, const Bipartition& part);
std::size_t entropy_rank(const BitMatrix& hz, const Bipartition& part,
                         const LogicalConstraint& constraints);

/// Precomputes rank(H) once so scans over many bipartitions of the same
/// matrix pay only the two restricted ranks per call.
class EntropyEvaluator {
  public:
    explicit EntropyEvaluator(BitMatrix hz);
    EntropyEvaluator(BitMatrix hz, const LogicalConstraint& constraints);

    std::size_t operator()(const Bipartition& part) const;
    const BitMatrix& matrix() const { return h_; }

  private:
    BitMatrix h_;
    std::size_t rank_h_ = 0;
};

/// Block decomposition of hz for a bipartition, following the three-step
/// pipeline: delete single-subsystem cycles, extract boundary cycles on both
/// sides, then read off [I W~A 0 0; 0 WA WB 0; 0 0 W~B I]. Within a step the
/// lowest-index qubit is deleted first.
struct CanonicalBlocks {
    std::size_t n = 0;
    /// Row order of the reduced working matrix: deleted-A rows (deletion
    /// order), live rows, deleted-B rows (deletion order).
    std::vector<std::size_t> row_perm;
    /// Column order: deleted_a | live A ascending | live B ascending | deleted_b.
    std::vector<std::size_t> col_perm;
    BitMatrix wa; // live rows x live A columns
    BitMatrix wb; // live rows x live B columns
    std::vector<std::size_t> deleted_a; // qubit ids, deletion order
    std::vector<std::size_t> deleted_b;
    BitMatrix tilde_wa; // deleted-A rows x live A columns
    BitMatrix tilde_wb; // deleted-B rows x live B columns
    std::vector<std::size_t> live_a; // qubit ids, ascending
    std::vector<std::size_t> live_b;

    /// Reassembled block matrix in col_perm column order; its row space
    /// equals that of the column-permuted input.
    BitMatrix reassemble() const;
};

CanonicalBlocks canonicalize(const BitMatrix& hz, const Bipartition& part);

/// Eigenvalue multiset of a reduced density operator; values are
/// probabilities summing to 1.
struct Spectrum {
    std::vector<double> eigenvalues;
};

/// Brute-force oracle: build the equal superposition over
/// nullspace(hz + constraints), trace out B, and return the spectrum of
/// rho_A. Limited to n <= 14 (state vector of 2^n amplitudes).
Spectrum dense_oracle(const CssCode& code, const Bipartition& part);
Spectrum dense_oracle(const CssCode& code, const Bipartition& part,
                      const LogicalConstraint& constraints);

/// -sum lambda log2 lambda over the spectrum.
double entropy_bits(const Spectrum& spectrum);

/// Independent identity route: dim C - dim C_A - dim C_B with C the codeword
/// space of hz and C_A/C_B the codewords supported entirely inside A/B.
/// Equals entropy_rank by rank-nullity.
std::size_t entropy_codespace_identity(const BitMatrix& hz, const Bipartition& part);

} // namespace cssent
