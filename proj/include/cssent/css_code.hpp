#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "cssent/bitmatrix.hpp"

namespace cssent {

/// A CSS code given by its two parity-check matrices. Rows of hx are X-type
/// stabilizer generators, rows of hz are Z-type; columns index the n qubits.
/// For a valid code hx * hz^T = 0 over GF(2) and k = n - rank(hx) - rank(hz).
struct CssCode {
    std::string name;
    std::size_t n = 0;
    BitMatrix hx;
    BitMatrix hz;
    std::size_t k = 0;
};

struct ToricParams {
    std::size_t d = 2; // lattice side length, >= 2
};

/// Bivariate-bicycle code parameters. A = x^a + y^b + y^c and
/// B = y^d + x^e + x^f with x = S_l (x) I_m and y = I_l (x) S_m, so a, e, f
/// are x-exponents (mod l) and b, c, d are y-exponents (mod m).
struct BbParams {
    std::size_t l = 0, m = 0;
    std::size_t a = 0, b = 0, c = 0;
    std::size_t d = 0, e = 0, f = 0;
};

/// Quasi-cyclic code parameters. P is the circulant size, sigma and tau are
/// units of Z_P, r the multiplicative order of sigma, J/K the block-row counts
/// of hz/hx. r may be left 0 to have it computed.
struct QcParams {
    std::uint64_t P = 0;
    std::uint64_t sigma = 0;
    std::uint64_t tau = 0;
    std::size_t J = 0;
    std::size_t K = 0;
    std::size_t r = 0;
};

/// d x d toric code on a periodic square lattice; qubits on edges, plaquette
/// Z-checks, vertex X-checks. n = 2 d^2, k = 2.
/// Qubit indexing: horizontal edge (i,j) -> i*d + j, vertical edge (i,j) ->
/// d^2 + i*d + j, rows/columns modulo d.
CssCode build_toric(const ToricParams& p);

CssCode build_bb(const BbParams& p);

CssCode build_qc(const QcParams& p);

std::size_t toric_h_edge(std::size_t d, std::size_t i, std::size_t j);
std::size_t toric_v_edge(std::size_t d, std::size_t i, std::size_t j);

/// Canonical toric logical-Z pair: row 0 is the horizontal edges of lattice
/// row 0 (a non-contractible loop), row 1 the vertical edges of column 0.
BitMatrix toric_logical_z(std::size_t d);

/// QC model matrices (exponent tables) before circulant substitution.
/// C feeds hz, D feeds hx. Exposed for golden-value tests.
struct QcModel {
    std::vector<std::vector<std::uint64_t>> C;
    std::vector<std::vector<std::uint64_t>> D;
    std::size_t r = 0;
};
QcModel qc_model(const QcParams& p);

std::uint64_t multiplicative_order(std::uint64_t sigma, std::uint64_t P);

struct ValidationReport {
    bool commutation_ok = false;
    // Signed so a defective code (rank sum exceeding n) shows up as negative.
    long long recomputed_k = 0;
    bool k_matches = false;
    std::map<std::size_t, std::size_t> hx_row_weights;
    std::map<std::size_t, std::size_t> hz_row_weights;
    std::map<std::size_t, std::size_t> hx_col_weights;
    std::map<std::size_t, std::size_t> hz_col_weights;

    bool ok() const { return commutation_ok && k_matches; }
};

ValidationReport validate(const CssCode& code);

/// k rows over n bits: each commutes with every hx row, none lies in
/// rowspace(hz), and the rows are independent modulo rowspace(hz). A bounded
/// stabilizer-reduction pass lowers representative weights best-effort;
/// weight minimality is not guaranteed.
BitMatrix logical_z_operators(const CssCode& code);

/// Upper bound on the Z-distance: minimum Hamming weight over `samples`
/// random differences of nullspace(hx) codewords that fall outside
/// rowspace(hz). Sample i draws from derive_seed(seed, i), so the estimate is
/// non-increasing in `samples` for a fixed seed. Returns nullopt when
/// samples == 0 or no qualifying difference was seen.
std::optional<std::size_t> estimate_distance_ub(const CssCode& code, std::size_t samples,
                                                std::uint64_t seed);

/// .css file: line 1 name, line 2 n, "HX <rows>" + rows, "HZ <rows>" + rows.
/// Loading recomputes k from ranks and does not enforce commutation (use
/// validate() for that), so defective files can be inspected.
void save_css(const CssCode& code, const std::filesystem::path& path);
CssCode load_css(const std::filesystem::path& path);

} // namespace cssent
