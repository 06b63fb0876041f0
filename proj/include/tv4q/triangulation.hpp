// Generalised 3-manifold triangulations: tetrahedra glued along their
// triangular facets, with the computed vertex/edge/triangle skeleton.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tv4q {

struct Perm4 {
    std::array<std::uint8_t, 4> image{0, 1, 2, 3};

    Perm4() = default;
    Perm4(int a, int b, int c, int d)
        : image{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {
        validate();
    }

    int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }

    Perm4 inverse() const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.image[image[i]] = static_cast<std::uint8_t>(i);
        return p;
    }
    // (a.then(b))(x) = b(a(x))
    Perm4 then(const Perm4& b) const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.image[i] = b.image[image[i]];
        return p;
    }

    bool operator==(const Perm4& o) const { return image == o.image; }

    void validate() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (image[i] > 3) throw std::invalid_argument("Perm4: image out of range");
            seen |= 1 << image[i];
        }
        if (seen != 0xF) throw std::invalid_argument("Perm4: not a permutation");
    }
};

struct Gluing {
    int tet = -1;  // -1: facet unglued (boundary)
    Perm4 perm;

    bool glued() const { return tet >= 0; }
    bool operator==(const Gluing& o) const {
        return tet == o.tet && (!glued() || perm == o.perm);
    }
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-slot convention: slot k <-> vertex pair, in the order
// {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}. Opposite slot pairs: (0,5),(1,4),(2,3).
inline constexpr std::array<std::array<int, 2>, 6> kEdgeSlotVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<int, 6> kOppositeSlot{5, 4, 3, 2, 1, 0};

inline int edge_slot(int a, int b) {
    static constexpr int table[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    int s = table[a][b];
    if (s < 0) throw std::invalid_argument("edge_slot: degenerate pair");
    return s;
}

class Triangulation {
public:
    // Skeleton is computed eagerly; throws on an inconsistent gluing relation.
    explicit Triangulation(std::vector<std::array<Gluing, 4>> gluings);

    int tet_count() const { return n_; }
    int vertex_count() const { return v_; }
    int edge_count() const { return e_; }
    int triangle_count() const { return f_; }

    const Gluing& gluing(int tet, int facet) const { return glu_[tet][facet]; }
    bool has_boundary() const { return has_boundary_; }

    int vertex_class(int tet, int corner) const { return vert_class_[tet][corner]; }
    int edge_class(int tet, int slot) const { return edge_class_[tet][slot]; }
    int triangle_class(int tet, int facet) const { return tri_class_[tet][facet]; }

    // Orientation of (tet, slot)'s low-to-high vertex direction relative to
    // the class representative; +1 or -1. Undefined (0) if the class is
    // identified with itself in reverse.
    int edge_sign(int tet, int slot) const { return edge_sign_[tet][slot]; }
    bool has_reversed_edge() const { return has_reversed_edge_; }

    // Parity (+1/-1) of the facet's embedding relative to the triangle
    // class representative, comparing increasing-vertex orderings.
    int triangle_sign(int tet, int facet) const { return tri_sign_[tet][facet]; }

    std::pair<int, int> edge_representative(int edgeClass) const { return edge_rep_[edgeClass]; }
    std::pair<int, int> triangle_representative(int triClass) const { return tri_rep_[triClass]; }
    std::pair<int, int> vertex_representative(int vertClass) const { return vert_rep_[vertClass]; }

    // All (tet, slot) embeddings of an edge class, lexicographic order.
    const std::vector<std::pair<int, int>>& edge_embeddings(int edgeClass) const {
        return edge_emb_[edgeClass];
    }
    const std::vector<std::pair<int, int>>& triangle_embeddings(int triClass) const {
        return tri_emb_[triClass];
    }

private:
    void compute_skeleton();

    int n_ = 0;
    std::vector<std::array<Gluing, 4>> glu_;
    bool has_boundary_ = false;
    bool has_reversed_edge_ = false;

    int v_ = 0, e_ = 0, f_ = 0;
    std::vector<std::array<int, 4>> vert_class_;
    std::vector<std::array<int, 6>> edge_class_;
    std::vector<std::array<int, 4>> tri_class_;
    std::vector<std::array<int, 6>> edge_sign_;
    std::vector<std::array<int, 4>> tri_sign_;
    std::vector<std::pair<int, int>> vert_rep_, edge_rep_, tri_rep_;
    std::vector<std::vector<std::pair<int, int>>> edge_emb_, tri_emb_;
};

// TRI text format (closed triangulations; '-' marks an unglued facet).
Triangulation parse_triangulation(const std::string& text);
std::string to_tri(const Triangulation& t);

struct ClosedCheck {
    bool ok = false;
    std::string reason;  // first violated condition, with the offending simplex
    int v = 0, e = 0;
    int beta0 = 0;
};

ClosedCheck check_closed_manifold(const Triangulation& t);

// Replaces the two tetrahedra incident to the given triangle class by three
// around a new edge. The triangle must lie in two distinct tetrahedra.
Triangulation pachner_23(const Triangulation& t, int triangleClass);

// Closed 1-vertex triangulation of the lens space L(p,q), built as a layered
// solid torus closed by a fold; H1 is verified internally.
Triangulation generate_lens_space(long p, long q);

}  // namespace tv4q
