// Lens spaces via layered solid tori: starting from the one-tetrahedron
// solid torus, repeatedly layer a tetrahedron over a boundary edge, then
// fold the two boundary faces together. Which curve the fold kills is
// tracked through the layering in (lambda, mu) coordinates, so candidates
// are searched symbolically and only the accepted one is built.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "tv4q/homology.hpp"
#include "tv4q/triangulation.hpp"

namespace tv4q {

namespace {

enum class Move { Layer, SwapUV };

using Vec2 = std::array<long long, 2>;

Vec2 operator+(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
Vec2 operator-(Vec2 a) { return {-a[0], -a[1]}; }
Vec2 scale(long long c, Vec2 a) { return {c * a[0], c * a[1]}; }

enum class Fold { D, U, V };  // kills u-v, u+2v, 2u+v respectively

// Reverse subtractive Euclid from the target boundary-edge counts back to
// the base counts (2,1); Layer maps (x,y) -> (y, x+y), SwapUV swaps.
std::optional<std::vector<Move>> path_to_counts(long long cu, long long cv) {
    std::vector<Move> rev;
    while (!(cu == 2 && cv == 1)) {
        if (cu == 1 && cv == 2) {
            rev.push_back(Move::SwapUV);
            std::swap(cu, cv);
        } else if (cv > cu) {
            rev.push_back(Move::Layer);
            long long px = cv - cu, py = cu;
            cu = px;
            cv = py;
        } else if (cu > cv) {
            rev.push_back(Move::SwapUV);
            std::swap(cu, cv);
        } else {
            return std::nullopt;  // (1,1) is not a layered-torus state
        }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

struct Frame {
    Vec2 u{-2, -1}, v{-1, 0};  // boundary edges in (lambda, mu) coordinates

    void apply(Move m) {
        if (m == Move::SwapUV) {
            std::swap(u, v);
        } else {
            Vec2 nu = -v, nv = -(u + v);
            u = nu;
            v = nv;
        }
    }
};

Vec2 killed_curve(const Frame& f, Fold fold) {
    switch (fold) {
        case Fold::D: return f.u + (-f.v);
        case Fold::U: return f.u + scale(2, f.v);
        case Fold::V: return scale(2, f.u) + f.v;
    }
    return {};
}

// Boundary-face state: eps maps the model boundary triangle's corners
// 0,1,2 to tetrahedron vertices; eps(3) is the facet.
struct Builder {
    std::vector<std::array<Gluing, 4>> glu;
    int tetL = 0, tetR = 0;
    Perm4 epsL{0, 2, 1, 3}, epsR{0, 3, 1, 2};

    Builder() {
        glu.push_back({});
        set_pair(0, 0, 0, Perm4(1, 2, 3, 0));
    }

    void set_pair(int t1, int f1, int t2, const Perm4& p) {
        glu[static_cast<std::size_t>(t1)][static_cast<std::size_t>(f1)] = Gluing{t2, p};
        glu[static_cast<std::size_t>(t2)][static_cast<std::size_t>(p(f1))] =
            Gluing{t1, p.inverse()};
    }

    void apply(Move m) {
        if (m == Move::SwapUV) {
            std::swap(tetL, tetR);
            std::swap(epsL, epsR);
            return;
        }
        int n = static_cast<int>(glu.size());
        glu.push_back({});
        set_pair(n, 3, tetL, epsL);
        const Perm4 cyc(1, 2, 3, 0);
        set_pair(n, 2, tetR, cyc.then(epsR));
        tetL = tetR = n;
        epsL = Perm4(2, 1, 3, 0);
        epsR = Perm4(2, 0, 3, 1);
    }

    void fold(Fold f) {
        Perm4 m;  // rotation of the model triangle, fixing slot 3
        if (f == Fold::U) m = Perm4(1, 2, 0, 3);
        if (f == Fold::V) m = Perm4(2, 0, 1, 3);
        set_pair(tetL, epsL(3), tetR, epsL.inverse().then(m).then(epsR));
    }
};

long long mod_inverse(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

std::optional<Triangulation> try_candidate(long long p, Fold fold, long long cu,
                                           long long cv,
                                           const std::vector<long long>& accept) {
    if (cu < 1 || cv < 1 || std::gcd(cu, cv) != 1) return std::nullopt;
    auto path = path_to_counts(cu, cv);
    if (!path) return std::nullopt;

    Frame frame;
    for (Move m : *path) frame.apply(m);
    Vec2 g = killed_curve(frame, fold);
    if (std::abs(g[0]) != p) return std::nullopt;
    long long qt = ((g[1] % p) + p) % p;
    if (std::find(accept.begin(), accept.end(), qt) == accept.end()) return std::nullopt;

    Builder b;
    for (Move m : *path) b.apply(m);
    b.fold(fold);
    Triangulation t(std::move(b.glu));

    if (!check_closed_manifold(t).ok || t.vertex_count() != 1) return std::nullopt;
    IntegralH1 h1 = integral_h1(t);
    bool ok = h1.free_rank == 0 &&
              (p == 1 ? h1.torsion.empty()
                      : (h1.torsion.size() == 1 && h1.torsion[0] == p));
    if (!ok) return std::nullopt;
    return t;
}

}  // namespace

Triangulation generate_lens_space(long p, long q) {
    if (p < 1) throw std::invalid_argument("generate_lens_space: requires p >= 1");
    long long qm = ((q % p) + p) % p;
    if (std::gcd(static_cast<long long>(p), qm) != 1)
        throw std::invalid_argument("generate_lens_space: p and q must be coprime");

    // L(p,q) is homeomorphic to L(p, q') for q' = +-q^{+-1} mod p.
    long long qi = (p == 1) ? 0 : mod_inverse(qm, p);
    std::vector<long long> accept{qm, (p - qm) % p, qi, (p - qi) % p};

    // Candidates in increasing boundary-edge count cu + cv (roughly,
    // increasing tetrahedron count).
    for (long long s = 2; s <= 2 * static_cast<long long>(p) + 64; ++s) {
        std::vector<std::pair<Fold, std::pair<long long, long long>>> cands;
        cands.push_back({Fold::U, {2 * s - p, p - s}});
        cands.push_back({Fold::V, {p - s, 2 * s - p}});
        if (s - p >= 2 && (s - p) % 2 == 0) {
            long long k = (s - p) / 2;
            cands.push_back({Fold::D, {k + p, k}});
            cands.push_back({Fold::D, {k, k + p}});
        }
        for (auto [fold, c] : cands)
            if (auto t = try_candidate(p, fold, c.first, c.second, accept))
                return *std::move(t);
    }
    throw std::logic_error("generate_lens_space: no layered construction found");
}

}  // namespace tv4q
