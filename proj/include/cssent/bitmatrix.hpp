#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cssent {

/// Dense bit-packed vector over GF(2). Addition (operator^=) is the symmetric
/// difference of the corresponding edge/support sets.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size);
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    std::size_t weight() const;
    bool any() const;
    bool operator==(const BitVector&) const = default;

    std::string to_string() const;
    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// GF(2) parity of <a, b>. Sizes must match.
bool dot(const BitVector& a, const BitVector& b);

/// Dense GF(2) matrix with bit-packed rows. Rows and columns are 0-indexed.
/// 0-row and 0-column matrices are legal everywhere.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Build from "0"/"1" strings, one per row. All rows must have equal length.
    static BitMatrix from_rows(std::span<const std::string_view> rows);
    static BitMatrix from_rows(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    /// row[dst] ^= row[src]
    void xor_rows(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_any(std::size_t r) const;
    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;

    void append_row(const BitVector& v);

    BitMatrix transposed() const;
    BitMatrix select_columns(std::span<const std::size_t> cols) const;
    BitMatrix select_rows(std::span<const std::size_t> rows) const;

    /// this * other over GF(2); cols() must equal other.rows().
    BitMatrix multiply(const BitMatrix& other) const;
    /// this * v over GF(2); v.size() must equal cols().
    BitVector apply(const BitVector& v) const;

    bool is_zero() const;
    bool operator==(const BitMatrix&) const = default;

    /// Text format: first line "rows cols", then one 0/1 line per row.
    std::string to_text() const;
    static BitMatrix parse_text(std::istream& in);
    static BitMatrix parse_text(const std::string& text);

    std::span<const std::uint64_t> row_words(std::size_t r) const;
    std::span<std::uint64_t> row_words(std::size_t r);
    std::size_t words_per_row() const { return stride_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Stack b below a; widths must match.
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);

struct RrefResult {
    BitMatrix matrix;
    /// Strictly increasing pivot columns; size equals the rank.
    std::vector<std::size_t> pivot_cols;
    /// row_perm[i] = index of the input row that ended up at position i,
    /// tracking the swaps applied during elimination.
    std::vector<std::size_t> row_perm;
};

/// Row-space dimension over GF(2). Input is not modified.
std::size_t rank(const BitMatrix& m);

/// Reduced row-echelon form. Pivoting scans columns left to right and picks
/// the lowest-index candidate row, so the output is deterministic.
RrefResult rref(const BitMatrix& m);

/// Rows form a basis of {z : m z = 0}; row count = cols - rank. The nullspace
/// of a 0 x n matrix is the n x n identity.
BitMatrix nullspace_basis(const BitMatrix& m);

/// True iff v is a GF(2) combination of the rows of m.
bool in_row_space(const BitMatrix& m, const BitVector& v);

/// Incremental row-space membership/reduction helper. Seed it with a matrix,
/// then query or grow one vector at a time.
class RowSpace {
  public:
    RowSpace() = default;
    explicit RowSpace(const BitMatrix& m);

    std::size_t dimension() const { return basis_.size(); }
    /// Reduce v against the basis; returns the residual (zero iff v is in the span).
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const;
    /// Insert v if independent; returns true if the dimension grew.
    bool insert(const BitVector& v);

  private:
    // basis_[i] has leading 1 at pivot_[i]; pivots strictly increasing is not
    // required, each pivot is just unique.
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivot_;
};

} // namespace cssent
