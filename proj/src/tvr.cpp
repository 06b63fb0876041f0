#include "tv4q/tvr.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "tv4q/tv4.hpp"

namespace tv4q {

QuantumRing::QuantumRing(int r, int q) : r_(r), q_(q) {
    if (r < 3 || q <= 0 || q >= 2 * r || std::gcd(r, q) != 1)
        throw std::invalid_argument("QuantumRing: need r >= 3, 0 < q < 2r, gcd(r,q) = 1");
    zeta_ = std::polar(1.0, std::numbers::pi * q / r);
    const int top = 2 * r + 2;
    brk_.resize(static_cast<std::size_t>(top + 1));
    fact_.resize(static_cast<std::size_t>(top + 1));
    brk_[0] = 1.0;
    fact_[0] = 1.0;
    std::complex<double> denom = zeta_ - 1.0 / zeta_;
    for (int i = 1; i <= top; ++i) {
        std::complex<double> zi = std::pow(zeta_, i);
        brk_[static_cast<std::size_t>(i)] = (zi - 1.0 / zi) / denom;
        fact_[static_cast<std::size_t>(i)] =
            fact_[static_cast<std::size_t>(i - 1)] * brk_[static_cast<std::size_t>(i)];
    }
}

bool triangle_admissible(int r, int di, int dj, int dk) {
    if ((di + dj + dk) % 2 != 0) return false;                     // parity
    if (dk > di + dj || dj > di + dk || di > dj + dk) return false;  // triangle ineq.
    return di + dj + dk <= 2 * (r - 2);                            // upper bound
}

std::complex<double> weight_vertex(const QuantumRing& ring) {
    return std::norm(ring.zeta() - 1.0 / ring.zeta()) / (2.0 * ring.r());
}

std::complex<double> weight_edge(const QuantumRing& ring, int dcolour) {
    double sign = dcolour % 2 == 0 ? 1.0 : -1.0;  // (-1)^{2i}
    return sign * ring.bracket(dcolour + 1);
}

std::complex<double> weight_triangle(const QuantumRing& ring, int di, int dj, int dk) {
    double sign = ((di + dj + dk) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * ring.bracket_fact((di + dj - dk) / 2) *
           ring.bracket_fact((di + dk - dj) / 2) * ring.bracket_fact((dj + dk - di) / 2) /
           ring.bracket_fact((di + dj + dk) / 2 + 1);
}

std::complex<double> weight_tet(const QuantumRing& ring, const std::array<int, 6>& d) {
    // Doubled triangle sums and opposite-pair quadruple sums.
    const std::array<int, 4> tri{d[0] + d[1] + d[3], d[0] + d[2] + d[4],
                                 d[1] + d[2] + d[5], d[3] + d[4] + d[5]};
    const std::array<int, 3> quad{d[0] + d[1] + d[4] + d[5], d[0] + d[2] + d[3] + d[5],
                                  d[1] + d[2] + d[3] + d[4]};
    int lo2 = *std::max_element(tri.begin(), tri.end());
    int hi2 = *std::min_element(quad.begin(), quad.end());
    std::complex<double> sum = 0.0;
    for (int z2 = lo2; z2 <= hi2; z2 += 2) {  // doubled z; parity matches tri sums
        int z = z2 / 2;
        std::complex<double> tau = 1.0, kappa = 1.0;
        for (int s : tri) tau *= ring.bracket_fact((z2 - s) / 2);
        for (int s : quad) kappa *= ring.bracket_fact((s - z2) / 2);
        double sign = z % 2 == 0 ? 1.0 : -1.0;
        sum += sign * ring.bracket_fact(z + 1) / (tau * kappa);
    }
    return sum;
}

namespace {

struct TriangleInfo {
    std::array<int, 3> edges;  // edge classes of the representative facet
    int max_edge;
};

std::vector<TriangleInfo> triangle_table(const Triangulation& t) {
    std::vector<TriangleInfo> out;
    for (int tc = 0; tc < t.triangle_count(); ++tc) {
        auto [tet, f] = t.triangle_representative(tc);
        std::array<int, 3> vs{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs[k++] = v;
        TriangleInfo info{{t.edge_class(tet, edge_slot(vs[0], vs[1])),
                           t.edge_class(tet, edge_slot(vs[0], vs[2])),
                           t.edge_class(tet, edge_slot(vs[1], vs[2]))},
                          0};
        info.max_edge = *std::max_element(info.edges.begin(), info.edges.end());
        out.push_back(info);
    }
    return out;
}

// Backtracking over edge-class colours; `leaf` is called for each admissible
// colouring. Colours are doubled, in {0, ..., maxd}.
template <typename Leaf>
void enumerate(const Triangulation& t, int r, int maxd, std::uint64_t budget, Leaf&& leaf) {
    const int e = t.edge_count();
    auto tris = triangle_table(t);
    std::vector<std::vector<const TriangleInfo*>> ready(static_cast<std::size_t>(e));
    for (const auto& info : tris)
        ready[static_cast<std::size_t>(info.max_edge)].push_back(&info);

    std::vector<int> colour(static_cast<std::size_t>(e), 0);
    std::uint64_t visited = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == e) {
            leaf(colour);
            return;
        }
        for (int c = 0; c <= maxd; ++c) {
            if (++visited > budget)
                throw BudgetExceeded("colouring enumeration exceeded its budget");
            colour[static_cast<std::size_t>(depth)] = c;
            bool ok = true;
            for (const TriangleInfo* info : ready[static_cast<std::size_t>(depth)])
                if (!triangle_admissible(r, colour[static_cast<std::size_t>(info->edges[0])],
                                         colour[static_cast<std::size_t>(info->edges[1])],
                                         colour[static_cast<std::size_t>(info->edges[2])])) {
                    ok = false;
                    break;
                }
            if (ok) self(self, depth + 1);
        }
        colour[static_cast<std::size_t>(depth)] = 0;
    };
    rec(rec, 0);
}

}  // namespace

std::complex<double> tv_r_bruteforce(const Triangulation& t, int r, int q,
                                     std::uint64_t budget) {
    if (t.has_boundary())
        throw std::invalid_argument("tv_r_bruteforce: triangulation is not closed");
    QuantumRing ring(r, q);
    auto tris = triangle_table(t);
    std::complex<double> sum = 0.0;
    enumerate(t, r, r - 2, budget, [&](const std::vector<int>& colour) {
        std::complex<double> w = 1.0;
        for (int ec = 0; ec < t.edge_count(); ++ec)
            w *= weight_edge(ring, colour[static_cast<std::size_t>(ec)]);
        for (const auto& info : tris)
            w *= weight_triangle(ring, colour[static_cast<std::size_t>(info.edges[0])],
                                 colour[static_cast<std::size_t>(info.edges[1])],
                                 colour[static_cast<std::size_t>(info.edges[2])]);
        for (int tet = 0; tet < t.tet_count(); ++tet) {
            std::array<int, 6> d{};
            for (int slot = 0; slot < 6; ++slot)
                d[static_cast<std::size_t>(slot)] =
                    colour[static_cast<std::size_t>(t.edge_class(tet, slot))];
            w *= weight_tet(ring, d);
        }
        sum += w;
    });
    std::complex<double> vw = weight_vertex(ring);
    for (int i = 0; i < t.vertex_count(); ++i) sum *= vw;
    return sum;
}

BruteResult tv4_bruteforce_exact(const Triangulation& t, int q, std::uint64_t budget) {
    if (t.has_boundary())
        throw std::invalid_argument("tv4_bruteforce_exact: triangulation is not closed");
    const bool zneg = z_is_negative(q);
    BruteResult res;
    enumerate(t, 4, 2, budget, [&](const std::vector<int>& colour) {
        // Classify each tetrahedron of the lift; alpha counts octagons,
        // lambda/mu/t11 feed the independent gamma sign.
        long alpha = 0, lambda = 0, mu = 0;
        for (int tet = 0; tet < t.tet_count(); ++tet) {
            int ones = 0, twos = 0, zeros = 0;
            bool twos_opposite = false;
            std::array<int, 6> d{};
            for (int slot = 0; slot < 6; ++slot) {
                d[static_cast<std::size_t>(slot)] =
                    colour[static_cast<std::size_t>(t.edge_class(tet, slot))];
                if (d[static_cast<std::size_t>(slot)] == 0) ++zeros;
                if (d[static_cast<std::size_t>(slot)] == 1) ++ones;
                if (d[static_cast<std::size_t>(slot)] == 2) ++twos;
            }
            for (int slot = 0; slot < 3; ++slot)
                if (d[static_cast<std::size_t>(slot)] == 2 &&
                    d[static_cast<std::size_t>(kOppositeSlot[slot])] == 2)
                    twos_opposite = true;
            if (twos == 2 && twos_opposite && ones == 4) ++alpha;
            else if (twos == 1 && ones == 4 && zeros == 1) ++lambda;
            else if (twos == 2 && !twos_opposite && ones == 3 && zeros == 1) ++mu;
        }
        long t11 = 0;  // triangles of type (1/2, 1/2, 1)
        for (int tc = 0; tc < t.triangle_count(); ++tc) {
            auto [tet, f] = t.triangle_representative(tc);
            std::array<int, 3> vs{};
            int k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != f) vs[k++] = v;
            int ones = 0, twos = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    int c = colour[static_cast<std::size_t>(
                        t.edge_class(tet, edge_slot(vs[a], vs[b])))];
                    ones += c == 1;
                    twos += c == 2;
                }
            if (ones == 2 && twos == 1) ++t11;
        }
        Colouring4 c4(colour.begin(), colour.end());
        Colouring3 theta = reduce(c4);
        long chi = surface_stats(t, theta).chi;
        DyadicSqrt2 zchi = DyadicSqrt2::z_pow(chi, zneg);
        res.raw += (alpha % 2 == 0) ? zchi : -zchi;
        long gamma = t11 + alpha + lambda + mu;
        res.raw_gamma += (gamma % 2 == 0) ? zchi : -zchi;
        (alpha % 2 == 0 ? res.b_plus : res.b_minus)[chi] += 1;
        res.colourings += 1;
    });
    return res;
}

}  // namespace tv4q
