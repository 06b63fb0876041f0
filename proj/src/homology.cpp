#include "tv4q/homology.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>
#include <utility>

namespace tv4q {

namespace {

// Incidence parities of edge classes in a triangle class representative.
std::array<int, 3> triangle_edge_classes(const Triangulation& t, int triClass) {
    auto [tet, f] = t.triangle_representative(triClass);
    std::array<int, 3> vs{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) vs[k++] = v;
    return {t.edge_class(tet, edge_slot(vs[0], vs[1])),
            t.edge_class(tet, edge_slot(vs[0], vs[2])),
            t.edge_class(tet, edge_slot(vs[1], vs[2]))};
}

}  // namespace

ChainComplexZ2 chain_complex_z2(const Triangulation& t) {
    const int v = t.vertex_count(), e = t.edge_count(), f = t.triangle_count();
    ChainComplexZ2 cc{Z2Matrix(static_cast<std::size_t>(v), static_cast<std::size_t>(e)),
                      Z2Matrix(static_cast<std::size_t>(e), static_cast<std::size_t>(f)),
                      Z2Matrix(static_cast<std::size_t>(f), static_cast<std::size_t>(t.tet_count()))};
    for (int ec = 0; ec < e; ++ec) {
        auto [tet, s] = t.edge_representative(ec);
        int a = t.vertex_class(tet, kEdgeSlotVertices[s][0]);
        int b = t.vertex_class(tet, kEdgeSlotVertices[s][1]);
        if (a != b) {
            cc.d1.row(static_cast<std::size_t>(a)).flip(static_cast<std::size_t>(ec));
            cc.d1.row(static_cast<std::size_t>(b)).flip(static_cast<std::size_t>(ec));
        }
    }
    for (int fc = 0; fc < f; ++fc)
        for (int ec : triangle_edge_classes(t, fc))
            cc.d2.row(static_cast<std::size_t>(ec)).flip(static_cast<std::size_t>(fc));
    for (int tet = 0; tet < t.tet_count(); ++tet)
        for (int facet = 0; facet < 4; ++facet)
            cc.d3.row(static_cast<std::size_t>(t.triangle_class(tet, facet)))
                .flip(static_cast<std::size_t>(tet));
    return cc;
}

std::pair<int, int> betti_z2(const Triangulation& t) {
    ChainComplexZ2 cc = chain_complex_z2(t);
    int r1 = static_cast<int>(rank(cc.d1));
    int r2 = static_cast<int>(rank(cc.d2));
    int beta0 = t.vertex_count() - r1;
    int beta1 = (t.edge_count() - r1) - r2;
    return {beta0, beta1};
}

std::vector<Z2Vector> adm3_basis(const Triangulation& t) {
    // One parity equation per triangle class over the edge-class variables;
    // this is d2 transposed.
    Z2Matrix a(static_cast<std::size_t>(t.triangle_count()),
               static_cast<std::size_t>(t.edge_count()));
    for (int fc = 0; fc < t.triangle_count(); ++fc)
        for (int ec : triangle_edge_classes(t, fc))
            a.row(static_cast<std::size_t>(fc)).flip(static_cast<std::size_t>(ec));
    return kernel_basis(a);
}

std::vector<std::vector<long long>> boundary1_z(const Triangulation& t) {
    std::vector<std::vector<long long>> m(
        static_cast<std::size_t>(t.vertex_count()),
        std::vector<long long>(static_cast<std::size_t>(t.edge_count()), 0));
    for (int ec = 0; ec < t.edge_count(); ++ec) {
        auto [tet, s] = t.edge_representative(ec);
        int a = t.vertex_class(tet, kEdgeSlotVertices[s][0]);
        int b = t.vertex_class(tet, kEdgeSlotVertices[s][1]);
        m[static_cast<std::size_t>(b)][static_cast<std::size_t>(ec)] += 1;  // head
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(ec)] -= 1;  // tail
    }
    return m;
}

std::vector<std::vector<long long>> boundary2_z(const Triangulation& t) {
    // Representative facet with vertices p0 < p1 < p2, oriented (p0,p1,p2):
    // boundary = (p1,p2) - (p0,p2) + (p0,p1), each edge transported to its
    // class orientation by edge_sign.
    std::vector<std::vector<long long>> m(
        static_cast<std::size_t>(t.edge_count()),
        std::vector<long long>(static_cast<std::size_t>(t.triangle_count()), 0));
    for (int fc = 0; fc < t.triangle_count(); ++fc) {
        auto [tet, f] = t.triangle_representative(fc);
        std::array<int, 3> vs{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs[k++] = v;
        const std::array<std::pair<std::pair<int, int>, int>, 3> terms{
            {{{vs[1], vs[2]}, +1}, {{vs[0], vs[2]}, -1}, {{vs[0], vs[1]}, +1}}};
        for (auto [pair, sgn] : terms) {
            int slot = edge_slot(pair.first, pair.second);
            int ec = t.edge_class(tet, slot);
            m[static_cast<std::size_t>(ec)][static_cast<std::size_t>(fc)] +=
                sgn * t.edge_sign(tet, slot);
        }
    }
    return m;
}

namespace {

struct Int64Overflow {};

// Minimal checked-integer wrapper so the int64 SNF pass can bail out to the
// arbitrary-precision pass on overflow.
struct CheckedI64 {
    long long v = 0;
    CheckedI64() = default;
    CheckedI64(long long x) : v(x) {}
    CheckedI64 operator-() const {
        if (v == std::numeric_limits<long long>::min()) throw Int64Overflow{};
        return {-v};
    }
    CheckedI64 operator*(CheckedI64 o) const {
        long long r;
        if (__builtin_mul_overflow(v, o.v, &r)) throw Int64Overflow{};
        return {r};
    }
    CheckedI64 operator-(CheckedI64 o) const {
        long long r;
        if (__builtin_sub_overflow(v, o.v, &r)) throw Int64Overflow{};
        return {r};
    }
    CheckedI64 operator+(CheckedI64 o) const {
        long long r;
        if (__builtin_add_overflow(v, o.v, &r)) throw Int64Overflow{};
        return {r};
    }
    CheckedI64 operator/(CheckedI64 o) const { return {v / o.v}; }
    CheckedI64 operator%(CheckedI64 o) const { return {v % o.v}; }
    bool operator==(long long x) const { return v == x; }
    bool operator!=(long long x) const { return v != x; }
};

CheckedI64 abs_val(CheckedI64 x) { return x.v < 0 ? -x : x; }
BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
bool less_abs(CheckedI64 a, CheckedI64 b) { return abs_val(a).v < abs_val(b).v; }
bool less_abs(const BigInt& a, const BigInt& b) { return abs_val(a) < abs_val(b); }

// g = x*a + y*b with |g| = gcd(|a|, |b|).
template <typename T>
void egcd(T a, T b, T& g, T& x, T& y) {
    T x0(1), x1(0), y0(0), y1(1);
    while (b != 0) {
        T q = a / b;
        T r = a - q * b;
        a = b;
        b = r;
        T nx = x0 - q * x1;
        x0 = x1;
        x1 = nx;
        T ny = y0 - q * y1;
        y0 = y1;
        y1 = ny;
    }
    g = a;
    x = x0;
    y = y0;
}

template <typename T>
std::vector<BigInt> snf(std::vector<std::vector<T>> m, int* rank_out) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> factors;
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // Smallest-magnitude nonzero pivot in the remaining block.
        std::size_t pr = top, pc = top;
        bool found = false;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (m[i][j] != 0 && (!found || less_abs(m[i][j], m[pr][pc]))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[top], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

        // Clear the pivot row and column with single extended-gcd combines
        // per entry; this keeps intermediate entries from blowing up the way
        // repeated Euclid passes do.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < rows; ++i) {
                if (m[i][top] == 0) continue;
                clean = false;
                if (m[i][top] % m[top][top] == 0) {
                    T f = m[i][top] / m[top][top];
                    for (std::size_t j = top; j < cols; ++j) m[i][j] = m[i][j] - f * m[top][j];
                } else {
                    T g, x, y;
                    egcd(m[top][top], m[i][top], g, x, y);
                    T af = m[top][top] / g, bf = m[i][top] / g;
                    for (std::size_t j = top; j < cols; ++j) {
                        T s = m[top][j], u = m[i][j];
                        m[top][j] = x * s + y * u;
                        m[i][j] = af * u - bf * s;
                    }
                }
            }
            for (std::size_t j = top + 1; j < cols; ++j) {
                if (m[top][j] == 0) continue;
                clean = false;
                if (m[top][j] % m[top][top] == 0) {
                    T f = m[top][j] / m[top][top];
                    for (std::size_t i = top; i < rows; ++i) m[i][j] = m[i][j] - f * m[i][top];
                } else {
                    T g, x, y;
                    egcd(m[top][top], m[top][j], g, x, y);
                    T af = m[top][top] / g, bf = m[top][j] / g;
                    for (std::size_t i = top; i < rows; ++i) {
                        T s = m[i][top], u = m[i][j];
                        m[i][top] = x * s + y * u;
                        m[i][j] = af * u - bf * s;
                    }
                }
            }
        }
        // Pivot must divide the rest of the block; if not, fold the offender
        // into the pivot column and repeat.
        bool divides = true;
        for (std::size_t i = top + 1; i < rows && divides; ++i)
            for (std::size_t j = top + 1; j < cols && divides; ++j)
                if (m[i][j] % m[top][top] != 0) {
                    for (std::size_t jj = top; jj < cols; ++jj)
                        m[top][jj] = m[top][jj] - (-m[i][jj]);
                    divides = false;
                }
        if (!divides) continue;  // re-run elimination at the same corner

        T d = abs_val(m[top][top]);
        if constexpr (std::is_same_v<T, CheckedI64>)
            factors.emplace_back(d.v);
        else
            factors.emplace_back(d);
        ++top;
    }
    if (rank_out) *rank_out = static_cast<int>(factors.size());
    std::vector<BigInt> torsion;
    for (const BigInt& d : factors)
        if (d > 1) torsion.push_back(d);
    std::sort(torsion.begin(), torsion.end());
    return torsion;
}

}  // namespace

std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<long long>> m,
                                            int* rank_out) {
    try {
        std::vector<std::vector<CheckedI64>> c(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            c[i].assign(m[i].begin(), m[i].end());
        return snf(std::move(c), rank_out);
    } catch (const Int64Overflow&) {
        std::vector<std::vector<BigInt>> b(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            b[i].assign(m[i].begin(), m[i].end());
        return snf(std::move(b), rank_out);
    }
}

IntegralH1 integral_h1(const Triangulation& t) {
    auto d1 = boundary1_z(t);
    auto d2 = boundary2_z(t);
    int rank1 = 0, rank2 = 0;
    smith_invariant_factors(std::move(d1), &rank1);
    IntegralH1 h;
    h.torsion = smith_invariant_factors(std::move(d2), &rank2);
    h.free_rank = (t.edge_count() - rank1) - rank2;
    return h;
}

}  // namespace tv4q
