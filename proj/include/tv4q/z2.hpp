// Dense bit-packed linear algebra and quadratic forms over GF(2).

#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tv4q {

using BigInt = boost::multiprecision::cpp_int;

class Z2Vector {
public:
    Z2Vector() = default;
    explicit Z2Vector(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool b) {
        if (b)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    Z2Vector& operator^=(const Z2Vector& o) {
        if (o.len_ != len_) throw std::invalid_argument("Z2Vector: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    Z2Vector operator^(const Z2Vector& o) const {
        Z2Vector r = *this;
        r ^= o;
        return r;
    }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Index of lowest set bit, or size() if zero.
    std::size_t lowest_bit() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
        return len_;
    }

    bool operator==(const Z2Vector& o) const {
        return len_ == o.len_ && words_ == o.words_;
    }

    // Parity of the bitwise AND with another vector (dot product over GF(2)).
    bool dot(const Z2Vector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("Z2Vector: length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return __builtin_popcountll(acc) & 1;
    }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

class Z2Matrix {
public:
    Z2Matrix() = default;
    Z2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, Z2Vector(cols)) {}

    static Z2Matrix identity(std::size_t k) {
        Z2Matrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool b) { row_[r].set(c, b); }
    void flip(std::size_t r, std::size_t c) { row_[r].flip(c); }

    const Z2Vector& row(std::size_t r) const { return row_[r]; }
    Z2Vector& row(std::size_t r) { return row_[r]; }

    Z2Vector multiply(const Z2Vector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Z2Matrix: dimension mismatch");
        Z2Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (row_[r].dot(v)) out.set(r, true);
        return out;
    }

    Z2Matrix transposed() const {
        Z2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    bool operator==(const Z2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Z2Vector> row_;
};

// GF(2) row-reduction rank; input taken by value.
std::size_t rank(Z2Matrix m);

// Deterministic (pivot-ordered) basis of {v : mv = 0}; size = cols - rank.
std::vector<Z2Vector> kernel_basis(const Z2Matrix& m);

enum class FormKind { Odd, EvenPlus, EvenMinus };

struct CanonicalForm {
    std::size_t k = 0;       // ambient dimension
    std::size_t l = 0;       // rank of the non-degenerate part
    FormKind kind = FormKind::EvenPlus;  // l = 0 reported as EvenPlus
};

// Quadratic form v |-> v^T R v over GF(2), R upper triangular. Diagonal
// entries are linear terms (x^2 = x).
class QuadraticFormZ2 {
public:
    QuadraticFormZ2() = default;
    explicit QuadraticFormZ2(std::size_t k) : k_(k), r_(k, k) {}

    // Folds an arbitrary square matrix into upper-triangular shape without
    // changing the induced form.
    static QuadraticFormZ2 from_matrix(const Z2Matrix& any);

    std::size_t dimension() const { return k_; }
    const Z2Matrix& matrix() const { return r_; }

    bool coeff(std::size_t i, std::size_t j) const { return r_.get(i, j); }
    void set_coeff(std::size_t i, std::size_t j, bool b) {
        if (i > j) throw std::invalid_argument("QuadraticFormZ2: lower-triangular coefficient");
        r_.set(i, j, b);
    }
    void toggle_pair(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        r_.flip(i, j);
    }

    bool evaluate(const Z2Vector& v) const;

    // The form v |-> this(m v); m must have k rows.
    QuadraticFormZ2 conjugate(const Z2Matrix& m) const;

    CanonicalForm canonical() const;

    // Exact number of zeros, via the canonical form.
    BigInt count_zeros() const;

private:
    std::size_t k_ = 0;
    Z2Matrix r_;
};

// Zero count implied by a canonical form.
BigInt canonical_zero_count(const CanonicalForm& c);

}  // namespace tv4q
