#include "tv4q/z2.hpp"

#include <algorithm>

namespace tv4q {

namespace {

// Row echelon form in place; returns pivot columns in increasing order.
std::vector<std::size_t> eliminate(Z2Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        std::swap(m.row(r), m.row(sel));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Z2Matrix m) { return eliminate(m).size(); }

std::vector<Z2Vector> kernel_basis(const Z2Matrix& m) {
    Z2Matrix e = m;
    std::vector<std::size_t> pivots = eliminate(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Z2Vector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Z2Vector v(m.cols());
        v.set(c, true);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            if (e.get(pr, c)) v.set(pivots[pr], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

QuadraticFormZ2 QuadraticFormZ2::from_matrix(const Z2Matrix& any) {
    if (any.rows() != any.cols())
        throw std::invalid_argument("QuadraticFormZ2: matrix not square");
    QuadraticFormZ2 f(any.rows());
    for (std::size_t i = 0; i < any.rows(); ++i) {
        if (any.get(i, i)) f.r_.set(i, i, true);
        for (std::size_t j = i + 1; j < any.cols(); ++j)
            if (any.get(i, j) ^ any.get(j, i)) f.r_.set(i, j, true);
    }
    return f;
}

bool QuadraticFormZ2::evaluate(const Z2Vector& v) const {
    if (v.size() != k_) throw std::invalid_argument("QuadraticFormZ2: dimension mismatch");
    // v^T R v = sum_{i<=j} R_ij v_i v_j
    bool acc = false;
    for (std::size_t i = 0; i < k_; ++i)
        if (v.get(i) && r_.row(i).dot(v)) acc = !acc;
    return acc;
}

QuadraticFormZ2 QuadraticFormZ2::conjugate(const Z2Matrix& m) const {
    if (m.rows() != k_) throw std::invalid_argument("QuadraticFormZ2: conjugation dimension mismatch");
    // M^T R M, then fold to upper triangular.
    const std::size_t d = m.cols();
    Z2Matrix rm(k_, d);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t c = 0; c < d; ++c) {
            // (R M)_{ic} = R.row(i) . M.col(c)
            bool b = false;
            for (std::size_t j = i; j < k_; ++j)
                if (r_.get(i, j) && m.get(j, c)) b = !b;
            rm.set(i, c, b);
        }
    Z2Matrix full(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            bool b = false;
            for (std::size_t i = 0; i < k_; ++i)
                if (m.get(i, r) && rm.get(i, c)) b = !b;
            full.set(r, c, b);
        }
    return from_matrix(full);
}

CanonicalForm QuadraticFormZ2::canonical() const {
    // Symplectic reduction of the polar form S = R + R^T. Hyperbolic pairs
    // are split off one at a time; the polar radical carries at most a
    // linear functional, which decides between the odd kind and the two
    // even (Arf) kinds.
    const std::size_t k = k_;
    std::vector<Z2Vector> basis;
    basis.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Z2Vector v(k);
        v.set(i, true);
        basis.push_back(std::move(v));
    }

    auto polar = [&](const Z2Vector& x, const Z2Vector& y) -> bool {
        // B(x,y) = phi(x+y) + phi(x) + phi(y)
        return evaluate(x ^ y) ^ evaluate(x) ^ evaluate(y);
    };

    std::size_t pairs = 0;
    bool arf = false;
    while (true) {
        // Find a hyperbolic pair among the remaining basis vectors.
        std::size_t iu = basis.size(), iv = basis.size();
        for (std::size_t i = 0; i < basis.size() && iu == basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                if (polar(basis[i], basis[j])) {
                    iu = i;
                    iv = j;
                    break;
                }
        if (iu == basis.size()) break;

        Z2Vector u = basis[iu], w = basis[iv];
        arf ^= evaluate(u) && evaluate(w);
        ++pairs;

        std::vector<Z2Vector> next;
        next.reserve(basis.size() - 2);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i == iu || i == iv) continue;
            Z2Vector x = basis[i];
            if (polar(x, w)) x ^= u;
            if (polar(x, u)) x ^= w;
            next.push_back(std::move(x));
        }
        basis = std::move(next);
    }

    // phi is linear on the polar radical.
    bool linear_part = false;
    for (const auto& x : basis)
        if (evaluate(x)) {
            linear_part = true;
            break;
        }

    CanonicalForm c;
    c.k = k;
    if (linear_part) {
        c.l = 2 * pairs + 1;
        c.kind = FormKind::Odd;
    } else {
        c.l = 2 * pairs;
        c.kind = arf ? FormKind::EvenMinus : FormKind::EvenPlus;
    }
    return c;
}

BigInt canonical_zero_count(const CanonicalForm& c) {
    BigInt ambient = BigInt(1) << static_cast<unsigned>(c.k - c.l);
    if (c.l == 0) return ambient;
    BigInt nd;
    switch (c.kind) {
        case FormKind::Odd:
            nd = BigInt(1) << static_cast<unsigned>(c.l - 1);
            break;
        case FormKind::EvenPlus:
            nd = (BigInt(1) << static_cast<unsigned>(c.l - 1)) +
                 (BigInt(1) << static_cast<unsigned>(c.l / 2 - 1));
            break;
        case FormKind::EvenMinus:
            nd = (BigInt(1) << static_cast<unsigned>(c.l - 1)) -
                 (BigInt(1) << static_cast<unsigned>(c.l / 2 - 1));
            break;
    }
    return ambient * nd;
}

BigInt QuadraticFormZ2::count_zeros() const { return canonical_zero_count(canonical()); }

}  // namespace tv4q
