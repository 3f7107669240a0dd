#include "cssent/css_code.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "cssent/errors.hpp"
#include "cssent/rng.hpp"

namespace cssent {

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1u) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return result;
}

/// Cyclic shift matrix: row i has its one at column (i+1) mod m.
BitMatrix shift_matrix(std::size_t m) {
    BitMatrix s(m, m);
    for (std::size_t i = 0; i < m; ++i) s.set(i, (i + 1) % m, true);
    return s;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            if (!a.get(ar, ac)) continue;
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    if (b.get(br, bc)) out.set(ar * b.rows() + br, ac * b.cols() + bc, true);
                }
            }
        }
    }
    return out;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out = a;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        auto dst = out.row_words(r);
        auto src = b.row_words(r);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
    return out;
}

BitMatrix matrix_power(const BitMatrix& m, std::size_t e) {
    BitMatrix result = BitMatrix::identity(m.rows());
    BitMatrix base = m;
    while (e) {
        if (e & 1u) result = result.multiply(base);
        base = base.multiply(base);
        e >>= 1;
    }
    return result;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.get(r, c)) out.set(r, c, true);
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (b.get(r, c)) out.set(r, a.cols() + c, true);
        }
    }
    return out;
}

} // namespace

std::size_t toric_h_edge(std::size_t d, std::size_t i, std::size_t j) {
    return (i % d) * d + (j % d);
}

std::size_t toric_v_edge(std::size_t d, std::size_t i, std::size_t j) {
    return d * d + (i % d) * d + (j % d);
}

CssCode build_toric(const ToricParams& p) {
    const std::size_t d = p.d;
    if (d < 2) throw ParameterError("toric: d must be >= 2");
    const std::size_t n = 2 * d * d;
    BitMatrix hz(d * d, n);
    BitMatrix hx(d * d, n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t row = i * d + j;
            // Plaquette (i,j): its four surrounding edges with wraparound.
            hz.set(row, toric_h_edge(d, i, j), true);
            hz.set(row, toric_h_edge(d, i + 1, j), true);
            hz.set(row, toric_v_edge(d, i, j), true);
            hz.set(row, toric_v_edge(d, i, j + 1), true);
            // Vertex (i,j): the four incident edges.
            hx.set(row, toric_h_edge(d, i, j), true);
            hx.set(row, toric_h_edge(d, i, j + d - 1), true);
            hx.set(row, toric_v_edge(d, i, j), true);
            hx.set(row, toric_v_edge(d, i + d - 1, j), true);
        }
    }
    CssCode code;
    code.name = "toric_d" + std::to_string(d);
    code.n = n;
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    code.k = n - rank(code.hx) - rank(code.hz);
    return code;
}

BitMatrix toric_logical_z(std::size_t d) {
    BitMatrix logical(2, 2 * d * d);
    for (std::size_t j = 0; j < d; ++j) logical.set(0, toric_h_edge(d, 0, j), true);
    for (std::size_t i = 0; i < d; ++i) logical.set(1, toric_v_edge(d, i, 0), true);
    return logical;
}

CssCode build_bb(const BbParams& p) {
    if (p.l == 0 || p.m == 0) throw ParameterError("bb: l and m must be positive");
    const std::size_t a = p.a % p.l, e = p.e % p.l, f = p.f % p.l;
    const std::size_t b = p.b % p.m, c = p.c % p.m, d = p.d % p.m;
    if (b == c) throw ParameterError("bb: y-exponents b and c must differ");
    if (e == f) throw ParameterError("bb: x-exponents e and f must differ");
    if (a == 0 && (b == 0 || c == 0)) throw ParameterError("bb: repeated term in A");
    if (d == 0 && (e == 0 || f == 0)) throw ParameterError("bb: repeated term in B");

    const BitMatrix x = kron(shift_matrix(p.l), BitMatrix::identity(p.m));
    const BitMatrix y = kron(BitMatrix::identity(p.l), shift_matrix(p.m));
    const BitMatrix A = add(add(matrix_power(x, a), matrix_power(y, b)), matrix_power(y, c));
    const BitMatrix B = add(add(matrix_power(y, d), matrix_power(x, e)), matrix_power(x, f));

    CssCode code;
    std::ostringstream name;
    name << "bb_l" << p.l << "m" << p.m << "_" << p.a << "_" << p.b << "_" << p.c << "_" << p.d
         << "_" << p.e << "_" << p.f;
    code.name = name.str();
    code.n = 2 * p.l * p.m;
    code.hx = hstack(A, B);
    code.hz = hstack(B.transposed(), A.transposed());
    code.k = code.n - rank(code.hx) - rank(code.hz);
    return code;
}

std::uint64_t multiplicative_order(std::uint64_t sigma, std::uint64_t P) {
    if (P < 2 || gcd64(sigma % P, P) != 1) throw ParameterError("order: sigma must be a unit mod P");
    std::uint64_t r = 1;
    std::uint64_t v = sigma % P;
    while (v != 1) {
        v = mulmod(v, sigma, P);
        ++r;
        if (r > P) throw ParameterError("order: not found"); // unreachable for units
    }
    return r;
}

QcModel qc_model(const QcParams& p) {
    if (p.P < 2) throw ParameterError("qc: P must be >= 2");
    const std::uint64_t sigma = p.sigma % p.P;
    const std::uint64_t tau = p.tau % p.P;
    if (gcd64(sigma, p.P) != 1) throw ParameterError("qc: gcd(sigma, P) must be 1");
    if (gcd64(tau, p.P) != 1) throw ParameterError("qc: gcd(tau, P) must be 1");
    const std::uint64_t r = multiplicative_order(sigma, p.P);
    if (p.r != 0 && p.r != r) throw ParameterError("qc: r does not match the order of sigma");
    for (std::uint64_t i = 1; i < r; ++i) {
        const std::uint64_t v = (powmod(sigma, i, p.P) + p.P - 1) % p.P;
        if (gcd64(v, p.P) != 1) throw ParameterError("qc: sigma^i - 1 must be coprime to P");
    }
    bool tau_is_power = false;
    for (std::uint64_t i = 0; i < r; ++i) {
        if (powmod(sigma, i, p.P) == tau) tau_is_power = true;
    }
    if (tau_is_power) throw ParameterError("qc: tau must not be a power of sigma");
    if (p.J == 0 || p.J > r) throw ParameterError("qc: J must be in [1, r]");
    if (p.K == 0 || p.K > r) throw ParameterError("qc: K must be in [1, r]");

    const std::uint64_t sigma_inv = powmod(sigma, r - 1, p.P);
    const std::size_t L = 2 * static_cast<std::size_t>(r);
    auto sigma_pow = [&](std::int64_t e) {
        return e >= 0 ? powmod(sigma, static_cast<std::uint64_t>(e), p.P)
                      : powmod(sigma_inv, static_cast<std::uint64_t>(-e), p.P);
    };

    QcModel model;
    model.r = static_cast<std::size_t>(r);
    model.C.assign(p.J, std::vector<std::uint64_t>(L, 0));
    model.D.assign(p.K, std::vector<std::uint64_t>(L, 0));
    for (std::size_t i = 0; i < p.J; ++i) {
        for (std::size_t j = 0; j < L; ++j) {
            const std::uint64_t s =
                sigma_pow(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i));
            model.C[i][j] = j < L / 2 ? s : mulmod(tau, s, p.P);
        }
    }
    for (std::size_t i = 0; i < p.K; ++i) {
        for (std::size_t j = 0; j < L; ++j) {
            const std::uint64_t s =
                sigma_pow(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j));
            const std::uint64_t v = j < L / 2 ? mulmod(tau, s, p.P) : s;
            model.D[i][j] = (p.P - v) % p.P; // negative exponent reduced mod P
        }
    }
    return model;
}

CssCode build_qc(const QcParams& p) {
    const QcModel model = qc_model(p);
    const std::size_t L = 2 * model.r;
    const std::size_t P = static_cast<std::size_t>(p.P);

    auto expand = [&](const std::vector<std::vector<std::uint64_t>>& blocks) {
        BitMatrix out(blocks.size() * P, L * P);
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            for (std::size_t bj = 0; bj < L; ++bj) {
                const std::size_t e = static_cast<std::size_t>(blocks[bi][bj]);
                // S_P^e has row i's one at column (i+e) mod P.
                for (std::size_t i = 0; i < P; ++i) {
                    out.set(bi * P + i, bj * P + (i + e) % P, true);
                }
            }
        }
        return out;
    };

    CssCode code;
    std::ostringstream name;
    name << "qc_P" << p.P << "s" << p.sigma << "t" << p.tau << "_J" << p.J << "K" << p.K;
    code.name = name.str();
    code.n = L * P;
    code.hz = expand(model.C);
    code.hx = expand(model.D);
    code.k = code.n - rank(code.hx) - rank(code.hz);
    return code;
}

ValidationReport validate(const CssCode& code) {
    ValidationReport report;
    report.commutation_ok = code.hx.multiply(code.hz.transposed()).is_zero();
    report.recomputed_k = static_cast<long long>(code.n) - static_cast<long long>(rank(code.hx)) -
                          static_cast<long long>(rank(code.hz));
    report.k_matches = report.recomputed_k == static_cast<long long>(code.k);
    for (std::size_t r = 0; r < code.hx.rows(); ++r) ++report.hx_row_weights[code.hx.row_weight(r)];
    for (std::size_t r = 0; r < code.hz.rows(); ++r) ++report.hz_row_weights[code.hz.row_weight(r)];
    for (std::size_t c = 0; c < code.n; ++c) {
        ++report.hx_col_weights[code.hx.col_weight(c)];
        ++report.hz_col_weights[code.hz.col_weight(c)];
    }
    return report;
}

BitMatrix logical_z_operators(const CssCode& code) {
    const BitMatrix candidates = nullspace_basis(code.hx);
    RowSpace span(code.hz);

    BitMatrix logical(0, code.n);
    for (std::size_t r = 0; r < candidates.rows() && logical.rows() < code.k; ++r) {
        BitVector v = candidates.row(r);
        if (!span.insert(v)) continue;
        // Best-effort weight reduction against the stabilizer rows.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t s = 0; s < code.hz.rows(); ++s) {
                BitVector trial = v ^ code.hz.row(s);
                if (trial.weight() < v.weight()) v = std::move(trial);
            }
        }
        logical.append_row(v);
    }
    return logical;
}

std::optional<std::size_t> estimate_distance_ub(const CssCode& code, std::size_t samples,
                                                std::uint64_t seed) {
    if (samples == 0) return std::nullopt;
    const BitMatrix basis = nullspace_basis(code.hx);
    if (basis.rows() == 0) return std::nullopt;
    const RowSpace stabilizers(code.hz);

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < samples; ++i) {
        SplitMix64 rng(derive_seed(seed, i));
        BitVector diff(code.n);
        // Difference of two random codewords is itself a uniform combination.
        for (int draw = 0; draw < 2; ++draw) {
            for (std::size_t b = 0; b < basis.rows(); ++b) {
                if (rng.coin()) diff ^= basis.row(b);
            }
        }
        if (!diff.any() || stabilizers.contains(diff)) continue;
        const std::size_t w = diff.weight();
        if (!best || w < *best) best = w;
    }
    return best;
}

void save_css(const CssCode& code, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << code.name << '\n' << code.n << '\n';
    out << "HX " << code.hx.rows() << '\n';
    for (std::size_t r = 0; r < code.hx.rows(); ++r) out << code.hx.row(r).to_string() << '\n';
    out << "HZ " << code.hz.rows() << '\n';
    for (std::size_t r = 0; r < code.hz.rows(); ++r) out << code.hz.row(r).to_string() << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

CssCode load_css(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    CssCode code;
    if (!std::getline(in, code.name)) throw IoError("css file: missing name line");
    std::string line;
    if (!std::getline(in, line)) throw IoError("css file: missing qubit count");
    try {
        code.n = std::stoull(line);
    } catch (const std::exception&) {
        throw IoError("css file: bad qubit count '" + line + "'");
    }

    auto read_block = [&](const std::string& tag) {
        if (!std::getline(in, line)) throw IoError("css file: missing " + tag + " header");
        std::istringstream header(line);
        std::string got;
        std::size_t rows = 0;
        if (!(header >> got >> rows) || got != tag)
            throw IoError("css file: expected '" + tag + " <rows>'");
        BitMatrix m(rows, code.n);
        for (std::size_t r = 0; r < rows; ++r) {
            if (!std::getline(in, line)) throw IoError("css file: truncated " + tag + " rows");
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.size() != code.n) throw IoError("css file: ragged " + tag + " row");
            for (std::size_t c = 0; c < code.n; ++c) {
                if (line[c] == '1') {
                    m.set(r, c, true);
                } else if (line[c] != '0') {
                    throw IoError("css file: rows may contain only '0' and '1'");
                }
            }
        }
        return m;
    };

    code.hx = read_block("HX");
    code.hz = read_block("HZ");
    const std::size_t rank_sum = rank(code.hx) + rank(code.hz);
    code.k = rank_sum <= code.n ? code.n - rank_sum : 0;
    return code;
}

} // namespace cssent
