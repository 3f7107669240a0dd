#include "cssent/bitmatrix.hpp"

#include <bit>
#include <sstream>

#include "cssent/errors.hpp"

namespace cssent {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

} // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw IoError("bit string may contain only '0' and '1'");
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t mask = 1ull << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) {
    words_[i / kWordBits] ^= 1ull << (i % kWordBits);
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) throw DimensionError("BitVector xor: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::any() const {
    for (std::uint64_t w : words_) {
        if (w) return true;
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
    std::uint64_t acc = 0;
    auto aw = a.words();
    auto bw = b.words();
    for (std::size_t w = 0; w < aw.size(); ++w) acc ^= aw[w] & bw[w];
    return std::popcount(acc) & 1u;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const std::string_view> rows) {
    if (rows.empty()) return BitMatrix();
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] == '1') {
                m.set(r, c, true);
            } else if (rows[r][c] != '0') {
                throw IoError("matrix rows may contain only '0' and '1'");
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
    std::vector<std::string_view> v(rows);
    return from_rows(std::span<const std::string_view>(v));
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t mask = 1ull << (c % kWordBits);
    if (value) {
        data_[r * stride_ + c / kWordBits] |= mask;
    } else {
        data_[r * stride_ + c / kWordBits] &= ~mask;
    }
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    for (std::size_t w = 0; w < src.size(); ++w) v.words()[w] = src[w];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw DimensionError("set_row: width mismatch");
    auto dst = row_words(r);
    auto src = v.words();
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = src[w];
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * stride_;
    const std::uint64_t* s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = data_.data() + a * stride_;
    std::uint64_t* pb = data_.data() + b * stride_;
    for (std::size_t w = 0; w < stride_; ++w) std::swap(pa[w], pb[w]);
}

bool BitMatrix::row_any(std::size_t r) const {
    auto words = row_words(r);
    for (std::uint64_t w : words) {
        if (w) return true;
    }
    return false;
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t total = 0;
    for (std::uint64_t w : row_words(r)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows_; ++r) total += get(r, c);
    return total;
}

void BitMatrix::append_row(const BitVector& v) {
    if (cols_ == 0 && rows_ == 0) {
        cols_ = v.size();
        stride_ = words_for(cols_);
    }
    if (v.size() != cols_) throw DimensionError("append_row: width mismatch");
    data_.resize((rows_ + 1) * stride_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
    BitMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw DimensionError("select_columns: index out of range");
            if (get(r, cols[j])) out.set(r, j, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
    BitMatrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw DimensionError("select_rows: index out of range");
        auto dst = out.row_words(i);
        auto src = row_words(rows[i]);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w];
    }
    return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("multiply: inner dimensions differ");
    BitMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto dst = out.row_words(r);
        auto words = row_words(r);
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                const std::size_t j = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                auto src = other.row_words(j);
                for (std::size_t k = 0; k < src.size(); ++k) dst[k] ^= src[k];
                bits &= bits - 1;
            }
        }
    }
    return out;
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.size() != cols_) throw DimensionError("apply: width mismatch");
    BitVector out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words.size(); ++w) acc ^= words[w] & vw[w];
        if (std::popcount(acc) & 1u) out.set(r, true);
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t w : data_) {
        if (w) return false;
    }
    return true;
}

std::string BitMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) out << row(r).to_string() << '\n';
    return out.str();
}

BitMatrix BitMatrix::parse_text(std::istream& in) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(in >> rows >> cols)) throw IoError("matrix text: missing 'rows cols' header");
    std::string line;
    std::getline(in, line); // consume end of header line
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw IoError("matrix text: truncated row data");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != cols) throw IoError("matrix text: ragged row");
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] == '1') {
                m.set(r, c, true);
            } else if (line[c] != '0') {
                throw IoError("matrix text: rows may contain only '0' and '1'");
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_text(in);
}

std::span<const std::uint64_t> BitMatrix::row_words(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
}

std::span<std::uint64_t> BitMatrix::row_words(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw DimensionError("vstack: width mismatch");
    BitMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row_words(r);
        auto src = a.row_words(r);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w];
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        auto dst = out.row_words(a.rows() + r);
        auto src = b.row_words(r);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w];
    }
    return out;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    const std::size_t rows = work.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (work.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = pivot + 1; i < rows; ++i) {
            if (work.get(i, c)) work.xor_rows(i, r);
        }
        ++r;
    }
    return r;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.matrix = m;
    res.row_perm.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) res.row_perm[i] = i;

    BitMatrix& work = res.matrix;
    const std::size_t rows = work.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (work.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        work.swap_rows(r, pivot);
        std::swap(res.row_perm[r], res.row_perm[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && work.get(i, c)) work.xor_rows(i, r);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

BitMatrix nullspace_basis(const BitMatrix& m) {
    const RrefResult res = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : res.pivot_cols) is_pivot[c] = true;

    BitMatrix basis(n - res.pivot_cols.size(), n);
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis.set(out, f, true);
        for (std::size_t i = 0; i < res.pivot_cols.size(); ++i) {
            if (res.matrix.get(i, f)) basis.set(out, res.pivot_cols[i], true);
        }
        ++out;
    }
    return basis;
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw DimensionError("in_row_space: width mismatch");
    RowSpace space(m);
    return space.contains(v);
}

RowSpace::RowSpace(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) insert(m.row(r));
}

BitVector RowSpace::reduce(BitVector v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (v.get(pivot_[i])) v ^= basis_[i];
    }
    return v;
}

bool RowSpace::contains(const BitVector& v) const {
    return !reduce(v).any();
}

bool RowSpace::insert(const BitVector& v) {
    BitVector residual = reduce(v);
    if (!residual.any()) return false;
    std::size_t p = 0;
    while (!residual.get(p)) ++p;
    // Keep earlier basis vectors clear at the new pivot.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].get(p)) basis_[i] ^= residual;
    }
    basis_.push_back(std::move(residual));
    pivot_.push_back(p);
    return true;
}

} // namespace cssent
