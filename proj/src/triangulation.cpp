#include "tv4q/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace tv4q {

namespace {

// Union-find with a sign (orientation parity) relative to the root.
struct SignedUnionFind {
    std::vector<int> parent;
    std::vector<int> sign;  // parity of element relative to parent chain
    bool conflict = false;

    explicit SignedUnionFind(std::size_t n) : parent(n), sign(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 1};
        auto [r, s] = find(parent[x]);
        parent[x] = r;
        sign[x] *= s;
        return {r, sign[x]};
    }

    // Declare sign(a) * sign(b) == rel.
    void unite(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) {
            if (sa * sb != rel) conflict = true;
            return;
        }
        parent[rb] = ra;
        sign[rb] = sa * rel * sb;
    }
};

int perm3_parity_between(const std::array<int, 3>& from, const std::array<int, 3>& to,
                         const Perm4& g) {
    // Parity of the position permutation induced by g mapping the sorted
    // vertex list `from` onto the sorted vertex list `to`.
    std::array<int, 3> pos{};
    for (int i = 0; i < 3; ++i) {
        int img = g(from[i]);
        pos[i] = static_cast<int>(std::find(to.begin(), to.end(), img) - to.begin());
    }
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (pos[i] > pos[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

std::array<int, 3> facet_vertices(int facet) {
    std::array<int, 3> vs{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != facet) vs[k++] = v;
    return vs;
}

}  // namespace

Triangulation::Triangulation(std::vector<std::array<Gluing, 4>> gluings)
    : n_(static_cast<int>(gluings.size())), glu_(std::move(gluings)) {
    // Validate the involution.
    for (int t = 0; t < n_; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glu_[t][f];
            if (!g.glued()) {
                has_boundary_ = true;
                continue;
            }
            if (g.tet >= n_)
                throw std::invalid_argument("gluing: target tetrahedron out of range");
            g.perm.validate();
            int tf = g.perm(f);
            if (g.tet == t && tf == f)
                throw std::invalid_argument("gluing: facet glued to itself");
            const Gluing& back = glu_[g.tet][tf];
            if (!back.glued() || back.tet != t || !(back.perm == g.perm.inverse()))
                throw std::invalid_argument(
                    "gluing: inconsistent involution at tetrahedron " + std::to_string(t) +
                    " facet " + std::to_string(f));
        }
    compute_skeleton();
}

void Triangulation::compute_skeleton() {
    const std::size_t nv = static_cast<std::size_t>(4 * n_);
    const std::size_t ne = static_cast<std::size_t>(6 * n_);
    const std::size_t nf = static_cast<std::size_t>(4 * n_);

    SignedUnionFind vuf(nv), euf(ne), fuf(nf);
    auto vid = [&](int t, int c) { return 4 * t + c; };
    auto eid = [&](int t, int s) { return 6 * t + s; };
    auto fid = [&](int t, int f) { return 4 * t + f; };

    for (int t = 0; t < n_; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glu_[t][f];
            if (!g.glued()) continue;
            fuf.unite(fid(t, f), fid(g.tet, g.perm(f)), 1);
            for (int v = 0; v < 4; ++v)
                if (v != f) vuf.unite(vid(t, v), vid(g.tet, g.perm(v)), 1);
            auto vs = facet_vertices(f);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    int a = vs[i], b = vs[j];
                    int ia = g.perm(a), ib = g.perm(b);
                    // Orientation convention: low-to-high vertex direction.
                    int rel = (ia < ib) ? 1 : -1;
                    euf.unite(eid(t, edge_slot(a, b)),
                              eid(g.tet, edge_slot(std::min(ia, ib), std::max(ia, ib))), rel);
                }
        }
    has_reversed_edge_ = euf.conflict;

    // Deterministic class numbering by smallest member id.
    auto number = [](SignedUnionFind& uf, std::size_t count, std::vector<int>& classOf,
                     std::vector<int>& signOf, std::vector<int>& repOf) {
        std::map<int, int> rootToClass;
        classOf.assign(count, -1);
        signOf.assign(count, 1);
        std::vector<int> rootSeen;
        for (std::size_t i = 0; i < count; ++i) {
            auto [r, s] = uf.find(static_cast<int>(i));
            auto it = rootToClass.find(r);
            int cls;
            if (it == rootToClass.end()) {
                cls = static_cast<int>(repOf.size());
                rootToClass.emplace(r, cls);
                repOf.push_back(static_cast<int>(i));
                rootSeen.push_back(s);
            } else {
                cls = it->second;
            }
            classOf[i] = cls;
            signOf[i] = s * rootSeen[cls];  // sign relative to first-seen member
        }
    };

    std::vector<int> vcls, vsig, vrep, ecls, esig, erep, fcls, fsig, frep;
    number(vuf, nv, vcls, vsig, vrep);
    number(euf, ne, ecls, esig, erep);
    number(fuf, nf, fcls, fsig, frep);

    v_ = static_cast<int>(vrep.size());
    e_ = static_cast<int>(erep.size());
    f_ = static_cast<int>(frep.size());

    vert_class_.assign(n_, {});
    edge_class_.assign(n_, {});
    tri_class_.assign(n_, {});
    edge_sign_.assign(n_, {});
    tri_sign_.assign(n_, {});
    for (int t = 0; t < n_; ++t) {
        for (int c = 0; c < 4; ++c) vert_class_[t][c] = vcls[vid(t, c)];
        for (int s = 0; s < 6; ++s) {
            edge_class_[t][s] = ecls[eid(t, s)];
            edge_sign_[t][s] = euf.conflict ? 0 : esig[eid(t, s)];
        }
        for (int f = 0; f < 4; ++f) tri_class_[t][f] = fcls[fid(t, f)];
    }

    vert_rep_.resize(v_);
    for (int i = 0; i < v_; ++i) vert_rep_[i] = {vrep[i] / 4, vrep[i] % 4};
    edge_rep_.resize(e_);
    for (int i = 0; i < e_; ++i) edge_rep_[i] = {erep[i] / 6, erep[i] % 6};
    tri_rep_.resize(f_);
    for (int i = 0; i < f_; ++i) tri_rep_[i] = {frep[i] / 4, frep[i] % 4};

    edge_emb_.assign(e_, {});
    for (int t = 0; t < n_; ++t)
        for (int s = 0; s < 6; ++s) edge_emb_[edge_class_[t][s]].push_back({t, s});
    tri_emb_.assign(f_, {});
    for (int t = 0; t < n_; ++t)
        for (int f = 0; f < 4; ++f) tri_emb_[tri_class_[t][f]].push_back({t, f});

    // Triangle embedding parity relative to the class representative.
    for (int cls = 0; cls < f_; ++cls) {
        const auto& embs = tri_emb_[cls];
        auto [rt, rf] = embs.front();
        for (auto [t, f] : embs) tri_sign_[t][f] = 0;
        tri_sign_[rt][rf] = 1;
        if (embs.size() == 2) {
            auto [t2, f2] = embs.back();
            const Gluing& g = glu_[rt][rf];
            // rep facet glued directly onto the partner facet
            if (g.glued() && g.tet == t2 && g.perm(rf) == f2)
                tri_sign_[t2][f2] = perm3_parity_between(facet_vertices(rf), facet_vertices(f2), g.perm);
        }
    }
}

// ---------------------------------------------------------------------------
// TRI format

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    long n = -1;
    std::vector<std::array<Gluing, 4>> gluings;
    std::size_t tetsRead = 0;

    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;

        if (n < 0) {
            if (tok != "tets")
                throw ParseError("line " + std::to_string(lineNo) + ": expected 'tets <n>' header");
            if (!(ls >> n) || n < 1)
                throw ParseError("line " + std::to_string(lineNo) + ": invalid tetrahedron count");
            gluings.assign(static_cast<std::size_t>(n), {});
            continue;
        }
        if (tetsRead >= static_cast<std::size_t>(n))
            throw ParseError("line " + std::to_string(lineNo) + ": extra tetrahedron line");

        for (int f = 0; f < 4; ++f) {
            if (f > 0 && !(ls >> tok))
                throw ParseError("line " + std::to_string(lineNo) + ": expected 4 facet entries");
            if (tok == "-") {
                gluings[tetsRead][f] = Gluing{};
                continue;
            }
            auto colon = tok.find(':');
            if (colon == std::string::npos || tok.size() != colon + 5)
                throw ParseError("line " + std::to_string(lineNo) + ": facet " + std::to_string(f) +
                                 ": expected <tet>:<p0p1p2p3>");
            long target;
            try {
                target = std::stol(tok.substr(0, colon));
            } catch (...) {
                throw ParseError("line " + std::to_string(lineNo) + ": bad tetrahedron index");
            }
            if (target < 0 || target >= n)
                throw ParseError("line " + std::to_string(lineNo) + ": tetrahedron index out of range");
            std::array<int, 4> img{};
            for (int i = 0; i < 4; ++i) {
                char c = tok[colon + 1 + static_cast<std::size_t>(i)];
                if (c < '0' || c > '3')
                    throw ParseError("line " + std::to_string(lineNo) + ": permutation digit out of range");
                img[i] = c - '0';
            }
            try {
                gluings[tetsRead][f] = Gluing{static_cast<int>(target), Perm4(img[0], img[1], img[2], img[3])};
            } catch (const std::invalid_argument& ex) {
                throw ParseError("line " + std::to_string(lineNo) + ": " + ex.what());
            }
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineNo) + ": trailing content '" + extra + "'");
        ++tetsRead;
    }
    if (n < 0) throw ParseError("missing 'tets <n>' header");
    if (tetsRead != static_cast<std::size_t>(n))
        throw ParseError("expected " + std::to_string(n) + " tetrahedron lines, got " +
                         std::to_string(tetsRead));

    try {
        return Triangulation(std::move(gluings));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

std::string to_tri(const Triangulation& t) {
    std::ostringstream out;
    out << "tets " << t.tet_count() << "\n";
    for (int i = 0; i < t.tet_count(); ++i) {
        for (int f = 0; f < 4; ++f) {
            if (f) out << ' ';
            const Gluing& g = t.gluing(i, f);
            if (!g.glued()) {
                out << '-';
            } else {
                out << g.tet << ':';
                for (int v = 0; v < 4; ++v) out << g.perm(v);
            }
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Closed-manifold diagnosis

ClosedCheck check_closed_manifold(const Triangulation& t) {
    ClosedCheck res;
    res.v = t.vertex_count();
    res.e = t.edge_count();

    for (int i = 0; i < t.tet_count(); ++i)
        for (int f = 0; f < 4; ++f)
            if (!t.gluing(i, f).glued()) {
                res.reason = "boundary facet: tetrahedron " + std::to_string(i) + " facet " +
                             std::to_string(f);
                return res;
            }

    if (t.has_reversed_edge()) {
        res.reason = "an edge is identified with itself in reverse";
        return res;
    }

    // Edge links: walk around each edge class; one closed cycle per class.
    const int n = t.tet_count();
    for (int cls = 0; cls < t.edge_count(); ++cls) {
        auto [t0, s0] = t.edge_representative(cls);
        // Start through one of the two facets containing the edge.
        auto [a, b] = std::pair{kEdgeSlotVertices[s0][0], kEdgeSlotVertices[s0][1]};
        int enterFacet = -1;
        for (int f = 0; f < 4; ++f)
            if (f != a && f != b) {
                enterFacet = f;
                break;
            }
        int ct = t0, ca = a, cb = b, cf = enterFacet;
        std::size_t steps = 0;
        do {
            // Leave through the other facet containing the edge.
            int leave = 6 - cf - ca - cb;
            const Gluing& g = t.gluing(ct, leave);
            int na = g.perm(ca), nb = g.perm(cb), nf = g.perm(leave);
            ct = g.tet;
            ca = na;
            cb = nb;
            cf = nf;
            ++steps;
            if (steps > static_cast<std::size_t>(6 * n) + 1) break;
        } while (!(ct == t0 && ((ca == a && cb == b) || (ca == b && cb == a)) &&
                   cf == enterFacet));
        if (ca == b && cb == a) {
            res.reason = "edge link reverses: edge class " + std::to_string(cls);
            return res;
        }
        if (steps != t.edge_embeddings(cls).size()) {
            res.reason = "edge link is not a single circle: edge class " + std::to_string(cls);
            return res;
        }
    }

    // Vertex links: triangle per corner, glued by the facet gluings; each
    // link must be a connected surface of Euler characteristic 2.
    // Link vertices are edge ends.
    std::vector<int> endParent(static_cast<std::size_t>(12 * n));
    std::iota(endParent.begin(), endParent.end(), 0);
    std::function<int(int)> findEnd = [&](int x) {
        while (endParent[x] != x) x = endParent[x] = endParent[endParent[x]];
        return x;
    };
    auto endId = [](int tet, int slot, int whichEnd) { return 12 * tet + 2 * slot + whichEnd; };
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(i, f);
            auto vs = facet_vertices(f);
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y) {
                    if (x == y) continue;
                    int p = vs[x], q = vs[y];
                    int ip = g.perm(p), iq = g.perm(q);
                    int s = edge_slot(std::min(p, q), std::max(p, q));
                    int is = edge_slot(std::min(ip, iq), std::max(ip, iq));
                    int endA = (p == kEdgeSlotVertices[s][0]) ? 0 : 1;
                    int endB = (ip == kEdgeSlotVertices[is][0]) ? 0 : 1;
                    int ra = findEnd(endId(i, s, endA));
                    int rb = findEnd(endId(g.tet, is, endB));
                    if (ra != rb) endParent[ra] = rb;
                }
        }

    // Corner (link-triangle) connectivity per vertex class.
    std::vector<int> cornerParent(static_cast<std::size_t>(4 * n));
    std::iota(cornerParent.begin(), cornerParent.end(), 0);
    std::function<int(int)> findCorner = [&](int x) {
        while (cornerParent[x] != x) x = cornerParent[x] = cornerParent[cornerParent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(i, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                int ra = findCorner(4 * i + v);
                int rb = findCorner(4 * g.tet + g.perm(v));
                if (ra != rb) cornerParent[ra] = rb;
            }
        }

    for (int cls = 0; cls < t.vertex_count(); ++cls) {
        long faces = 0;
        int component = -1;
        bool connected = true;
        std::vector<bool> endSeen(static_cast<std::size_t>(12 * n), false);
        long linkVerts = 0;
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < 4; ++c) {
                if (t.vertex_class(i, c) != cls) continue;
                ++faces;
                int root = findCorner(4 * i + c);
                if (component < 0) component = root;
                if (root != component) connected = false;
            }
        for (int i = 0; i < n; ++i)
            for (int s = 0; s < 6; ++s)
                for (int end = 0; end < 2; ++end) {
                    if (t.vertex_class(i, kEdgeSlotVertices[s][end]) != cls) continue;
                    int r = findEnd(endId(i, s, end));
                    if (!endSeen[static_cast<std::size_t>(r)]) {
                        endSeen[static_cast<std::size_t>(r)] = true;
                        ++linkVerts;
                    }
                }
        long linkEdges = 3 * faces / 2;
        long chi = linkVerts - linkEdges + faces;
        if (!connected) {
            res.reason = "vertex link disconnected: vertex class " + std::to_string(cls);
            return res;
        }
        if (chi != 2) {
            res.reason = "vertex link is not a sphere (chi = " + std::to_string(chi) +
                         "): vertex class " + std::to_string(cls);
            return res;
        }
    }

    // Connected components of the triangulation.
    std::vector<int> tetParent(static_cast<std::size_t>(n));
    std::iota(tetParent.begin(), tetParent.end(), 0);
    std::function<int(int)> findTet = [&](int x) {
        while (tetParent[x] != x) x = tetParent[x] = tetParent[tetParent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 4; ++f) {
            int ra = findTet(i), rb = findTet(t.gluing(i, f).tet);
            if (ra != rb) tetParent[ra] = rb;
        }
    int comps = 0;
    for (int i = 0; i < n; ++i)
        if (findTet(i) == i) ++comps;
    res.beta0 = comps;
    res.ok = true;
    return res;
}

// ---------------------------------------------------------------------------
// Pachner 2-3 move

Triangulation pachner_23(const Triangulation& t, int triangleClass) {
    if (triangleClass < 0 || triangleClass >= t.triangle_count())
        throw std::invalid_argument("pachner_23: triangle class out of range");
    const auto& embs = t.triangle_embeddings(triangleClass);
    if (embs.size() != 2)
        throw std::invalid_argument("pachner_23: triangle is not glued in a pair");
    auto [tetA, fa] = embs[0];
    auto [tetB, fbCheck] = embs[1];
    if (tetA == tetB)
        throw std::invalid_argument(
            "pachner_23: triangle lies twice in a single tetrahedron; move unsupported");
    const Gluing& join = t.gluing(tetA, fa);
    const Perm4 phi = join.perm;  // A labels -> B labels
    const int fb = phi(fa);
    (void)fbCheck;

    const int n = t.tet_count();
    // New indexing: old tets except A and B keep order; T0,T1,T2 appended.
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i)
        if (i != tetA && i != tetB) remap[i] = next++;
    const int base = n - 2;  // T_i = base + i

    auto tri = facet_vertices(fa);  // triangle vertices v0 < v1 < v2 in A labels

    // Embedding of new tet Ti into old labels:
    //   vertex 0 -> apex of A (= fa), 1 -> apex of B (= fb),
    //   2 -> v_{i+1}, 3 -> v_{i+2} (A labels; B side via phi).
    auto embedA = [&](int i) {
        Perm4 p;
        p.image[0] = static_cast<std::uint8_t>(fa);
        p.image[2] = static_cast<std::uint8_t>(tri[(i + 1) % 3]);
        p.image[3] = static_cast<std::uint8_t>(tri[(i + 2) % 3]);
        p.image[1] = static_cast<std::uint8_t>(tri[i]);  // facet slot: omitted vertex
        return p;
    };
    auto embedB = [&](int i) {
        Perm4 p;
        p.image[1] = static_cast<std::uint8_t>(fb);
        p.image[2] = static_cast<std::uint8_t>(phi(tri[(i + 1) % 3]));
        p.image[3] = static_cast<std::uint8_t>(phi(tri[(i + 2) % 3]));
        p.image[0] = static_cast<std::uint8_t>(phi(tri[i]));
        return p;
    };

    // External slots: (Ti, facet 1) covers A facet tri[i]; (Ti, facet 0)
    // covers B facet phi(tri[i]).
    struct Ext {
        int newTet, newFacet;
        int oldTet, oldFacet;
        Perm4 embed;  // new-tet labels -> old-tet labels
    };
    std::vector<Ext> ext;
    for (int i = 0; i < 3; ++i) {
        ext.push_back({base + i, 1, tetA, tri[i], embedA(i)});
        ext.push_back({base + i, 0, tetB, phi(tri[i]), embedB(i)});
    }
    auto findExt = [&](int oldTet, int oldFacet) -> const Ext* {
        for (const auto& s : ext)
            if (s.oldTet == oldTet && s.oldFacet == oldFacet) return &s;
        return nullptr;
    };

    std::vector<std::array<Gluing, 4>> out(static_cast<std::size_t>(n + 1));

    // Copy gluings among untouched tets, re-targeting external faces.
    for (int i = 0; i < n; ++i) {
        if (i == tetA || i == tetB) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(i, f);
            if (g.tet != tetA && g.tet != tetB) {
                out[remap[i]][f] = Gluing{remap[g.tet], g.perm};
            } else {
                const Ext* s = findExt(g.tet, g.perm(f));
                // g.perm: old labels -> old target labels; compose with embed^{-1}.
                out[remap[i]][f] = Gluing{s->newTet, g.perm.then(s->embed.inverse())};
            }
        }
    }

    // Internal gluings among T0,T1,T2: Ti facet 2 <-> T_{i+1} facet 3,
    // swapping vertices 2 and 3.
    const Perm4 swap23(0, 1, 3, 2);
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        out[base + i][2] = Gluing{base + j, swap23};
        out[base + j][3] = Gluing{base + i, swap23};
    }

    // External gluings.
    for (const auto& s : ext) {
        const Gluing& g = t.gluing(s.oldTet, s.oldFacet);
        int targetTet = g.tet;
        int targetFacet = g.perm(s.oldFacet);
        Perm4 toOldTarget = s.embed.then(g.perm);
        if (const Ext* other = findExt(targetTet, targetFacet)) {
            out[s.newTet][s.newFacet] = Gluing{other->newTet, toOldTarget.then(other->embed.inverse())};
        } else {
            out[s.newTet][s.newFacet] = Gluing{remap[targetTet], toOldTarget};
        }
    }

    return Triangulation(std::move(out));
}

}  // namespace tv4q
