#include "tv4q/tv4.hpp"

#include <algorithm>
#include <thread>

#include "tv4q/homology.hpp"

namespace tv4q {

namespace {

// Half-edge incidences of a triangle class at its representative facet.
std::array<int, 3> tri_edge_classes(const Triangulation& t, int triClass) {
    auto [tet, f] = t.triangle_representative(triClass);
    std::array<int, 3> vs{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) vs[k++] = v;
    return {t.edge_class(tet, edge_slot(vs[0], vs[1])),
            t.edge_class(tet, edge_slot(vs[0], vs[2])),
            t.edge_class(tet, edge_slot(vs[1], vs[2]))};
}

int tri_half_count(const Triangulation& t, const Colouring3& theta, int triClass) {
    int c = 0;
    for (int ec : tri_edge_classes(t, triClass))
        c += theta.get(static_cast<std::size_t>(ec));
    return c;
}

}  // namespace

Colouring3 reduce(const Colouring4& c4) {
    Colouring3 out(c4.size());
    for (std::size_t i = 0; i < c4.size(); ++i)
        if (c4[i] == 1) out.set(i, true);
    return out;
}

SurfaceStats surface_stats(const Triangulation& t, const Colouring3& theta) {
    SurfaceStats s;
    s.m0 = static_cast<long>(theta.popcount());
    for (int tc = 0; tc < t.triangle_count(); ++tc) {
        int c = tri_half_count(t, theta, tc);
        if (c != 0 && c != 2)
            throw std::invalid_argument("surface_stats: colouring is not admissible");
        if (c == 2) ++s.m1;
    }
    for (int tet = 0; tet < t.tet_count(); ++tet) {
        int halves = 0, mask = 0;
        for (int slot = 0; slot < 6; ++slot)
            if (theta.get(static_cast<std::size_t>(t.edge_class(tet, slot)))) {
                ++halves;
                mask |= 1 << slot;
            }
        if (halves == 0) continue;
        if (halves == 3) {
            // Triangle type: the three slots around one vertex.
            bool around = false;
            for (int v = 0; v < 4 && !around; ++v) {
                int vm = 0;
                for (int slot = 0; slot < 6; ++slot)
                    if (kEdgeSlotVertices[slot][0] == v || kEdgeSlotVertices[slot][1] == v)
                        vm |= 1 << slot;
                around = (mask == vm) || around;
            }
            if (around) {
                ++s.m_tri;
                continue;
            }
        }
        if (halves == 4) {
            // Quad type: the two uncoloured slots are an opposite pair.
            int other = (~mask) & 0x3F;
            bool quad = false;
            for (int slot = 0; slot < 6; ++slot)
                if (other == ((1 << slot) | (1 << kOppositeSlot[slot]))) quad = true;
            if (quad) {
                ++s.m_quad;
                continue;
            }
        }
        throw std::invalid_argument(
            "surface_stats: impossible tetrahedron pattern for an admissible colouring");
    }
    s.chi = s.m0 - s.m1 + s.m_tri + s.m_quad;
    return s;
}

EdgePartition edge_partition(const Triangulation& t, const Colouring3& theta) {
    EdgePartition p;
    const int e = t.edge_count();
    p.kind.assign(static_cast<std::size_t>(e), 2);
    for (int ec = 0; ec < e; ++ec)
        if (theta.get(static_cast<std::size_t>(ec))) p.kind[static_cast<std::size_t>(ec)] = 0;
    for (int tc = 0; tc < t.triangle_count(); ++tc) {
        if (tri_half_count(t, theta, tc) != 0) continue;
        for (int ec : tri_edge_classes(t, tc)) p.kind[static_cast<std::size_t>(ec)] = 1;
    }
    p.coord.assign(static_cast<std::size_t>(e), -1);
    for (int ec = 0; ec < e; ++ec)
        if (p.kind[static_cast<std::size_t>(ec)] == 1) {
            p.coord[static_cast<std::size_t>(ec)] = static_cast<int>(p.e1.size());
            p.e1.push_back(ec);
        }
    for (int ec = 0; ec < e; ++ec)
        if (p.kind[static_cast<std::size_t>(ec)] == 2) {
            p.coord[static_cast<std::size_t>(ec)] =
                static_cast<int>(p.e1.size() + p.e2.size());
            p.e2.push_back(ec);
        }
    return p;
}

std::pair<Z2Matrix, std::size_t> colouring_space(const Triangulation& t,
                                                 const Colouring3& theta,
                                                 const EdgePartition& part) {
    const std::size_t n1 = part.e1.size(), n2 = part.e2.size();

    // Index E1 members for the system columns.
    std::vector<int> e1col(static_cast<std::size_t>(t.edge_count()), -1);
    for (std::size_t i = 0; i < n1; ++i)
        e1col[static_cast<std::size_t>(part.e1[i])] = static_cast<int>(i);

    std::vector<Z2Vector> rows;
    for (int tc = 0; tc < t.triangle_count(); ++tc) {
        if (tri_half_count(t, theta, tc) != 0) continue;
        Z2Vector row(n1);
        for (int ec : tri_edge_classes(t, tc))
            row.flip(static_cast<std::size_t>(e1col[static_cast<std::size_t>(ec)]));
        rows.push_back(std::move(row));
    }
    Z2Matrix sys(rows.size(), n1);
    for (std::size_t r = 0; r < rows.size(); ++r) sys.row(r) = std::move(rows[r]);
    std::vector<Z2Vector> basis = kernel_basis(sys);
    const std::size_t m = basis.size();

    Z2Matrix M(n1 + n2, m + n2);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n1; ++i)
            if (basis[j].get(i)) M.set(i, j, true);
    for (std::size_t j = 0; j < n2; ++j) M.set(n1 + j, m + j, true);
    return {std::move(M), m};
}

QuadraticFormZ2 octagon_form(const Triangulation& t, const Colouring3& theta,
                             const EdgePartition& part, const Z2Matrix& m) {
    QuadraticFormZ2 q(part.e1.size() + part.e2.size());
    for (int tet = 0; tet < t.tet_count(); ++tet) {
        int mask = 0, halves = 0;
        for (int slot = 0; slot < 6; ++slot)
            if (theta.get(static_cast<std::size_t>(t.edge_class(tet, slot)))) {
                ++halves;
                mask |= 1 << slot;
            }
        if (halves != 4) continue;
        int zslot = -1;
        for (int slot = 0; slot < 6; ++slot)
            if (!(mask & (1 << slot)) && kOppositeSlot[slot] > slot) zslot = slot;
        if (zslot < 0 || (mask & (1 << kOppositeSlot[zslot]))) continue;  // not quad type
        int x = part.coord[static_cast<std::size_t>(t.edge_class(tet, zslot))];
        int y = part.coord[static_cast<std::size_t>(t.edge_class(tet, kOppositeSlot[zslot]))];
        q.toggle_pair(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
    return q.conjugate(m);
}

ClassRecord class_contribution(const Triangulation& t, const Colouring3& theta, int q) {
    const bool zneg = z_is_negative(q);
    ClassRecord rec;
    rec.theta = theta;
    rec.stats = surface_stats(t, theta);
    EdgePartition part = edge_partition(t, theta);
    auto [m, kdim] = colouring_space(t, theta, part);
    rec.dim = m.cols();
    QuadraticFormZ2 form = octagon_form(t, theta, part, m);
    rec.n0 = form.count_zeros();
    BigInt signedCount = 2 * rec.n0 - (BigInt(1) << rec.dim);
    rec.contribution =
        DyadicSqrt2::integer(signedCount) * DyadicSqrt2::z_pow(rec.stats.chi, zneg);
    return rec;
}

namespace {

struct Partial {
    DyadicSqrt2 raw;
    std::array<DyadicSqrt2, 3> triple;
    LaurentZ poly;
    std::map<long, BigInt> b_plus, b_minus;
};

void accumulate(Partial& acc, const ClassRecord& rec, bool trivial_class) {
    acc.raw += rec.contribution;
    int nu = trivial_class ? 0 : (rec.stats.chi % 2 == 0 ? 1 : 2);
    acc.triple[static_cast<std::size_t>(nu)] += rec.contribution;
    BigInt total = BigInt(1) << rec.dim;
    acc.poly.add(rec.stats.chi, 2 * rec.n0 - total);
    if (rec.n0 != 0) acc.b_plus[rec.stats.chi] += rec.n0;
    if (rec.n0 != total) acc.b_minus[rec.stats.chi] += total - rec.n0;
}

}  // namespace

TVReport tv4_compute(const Triangulation& t, int q, int jobs) {
    TVReport rep;
    rep.q = q;
    rep.z_negative = z_is_negative(q);
    rep.n = t.tet_count();
    rep.v = t.vertex_count();
    rep.e = t.edge_count();
    if (t.has_boundary())
        throw std::invalid_argument("tv4_compute: triangulation is not closed");
    rep.beta1 = betti_z2(t).second;
    rep.multi_vertex_warning = rep.v > 1;

    std::vector<Z2Vector> basis = adm3_basis(t);
    const std::size_t dim = basis.size();
    if (dim > 62) throw std::invalid_argument("tv4_compute: cocycle space too large");
    const std::uint64_t total = std::uint64_t{1} << dim;
    rep.class_count = total;

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1 || total <= 2) jobs = 1;
    std::uint64_t chunk = (total + static_cast<std::uint64_t>(jobs) - 1) /
                          static_cast<std::uint64_t>(jobs);
    if (chunk == 0) chunk = 1;

    rep.records.resize(total);
    std::vector<Partial> partials(static_cast<std::size_t>(jobs));
    auto gray = [](std::uint64_t i) { return i ^ (i >> 1); };

    auto worker = [&](int w) {
        std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) return;
        Colouring3 theta(static_cast<std::size_t>(t.edge_count()));
        std::uint64_t code = gray(lo);
        for (std::size_t b = 0; b < dim; ++b)
            if (code & (std::uint64_t{1} << b)) theta ^= basis[b];
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i != lo) {
                std::uint64_t flip = gray(i) ^ gray(i - 1);
                theta ^= basis[static_cast<std::size_t>(__builtin_ctzll(flip))];
            }
            ClassRecord rec = class_contribution(t, theta, q);
            bool trivial = theta.is_zero();
            accumulate(partials[static_cast<std::size_t>(w)], rec, trivial);
            rep.records[i] = std::move(rec);
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    for (const Partial& p : partials) {
        rep.raw += p.raw;
        for (int nu = 0; nu < 3; ++nu)
            rep.triple_raw[static_cast<std::size_t>(nu)] +=
                p.triple[static_cast<std::size_t>(nu)];
        for (const auto& [chi, c] : p.poly.coefficients()) rep.poly.add(chi, c);
        for (const auto& [chi, c] : p.b_plus) rep.b_plus[chi] += c;
        for (const auto& [chi, c] : p.b_minus) rep.b_minus[chi] += c;
    }
    const unsigned vshift = 2 * static_cast<unsigned>(rep.v);
    rep.normalized = rep.raw.halved(vshift);
    for (int nu = 0; nu < 3; ++nu)
        rep.triple[static_cast<std::size_t>(nu)] =
            rep.triple_raw[static_cast<std::size_t>(nu)].halved(vshift);
    return rep;
}

BigInt count_by_chi_parity(const Triangulation& t, long m, bool even) {
    TVReport rep = tv4_compute(t, 1, 1);
    const auto& table = even ? rep.b_plus : rep.b_minus;
    auto it = table.find(m);
    return it == table.end() ? BigInt(0) : it->second;
}

}  // namespace tv4q
