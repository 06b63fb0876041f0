// The per-cohomology-class algorithm for TV_{4,q}: edge partition, lift
// space, octagon quadratic form, zero counting, and the full driver with
// the triple invariant and the Laurent polynomial P_T(z).

#pragma once

#include <cstdint>
#include <map>

#include "tv4q/dyadic.hpp"
#include "tv4q/laurent.hpp"
#include "tv4q/triangulation.hpp"
#include "tv4q/z2.hpp"

namespace tv4q {

// theta in Adm(T,3): bit 1 = colour 1/2, indexed by edge class.
using Colouring3 = Z2Vector;

// Colours in {0, 1/2, 1} stored doubled as {0, 1, 2}, per edge class.
using Colouring4 = std::vector<std::uint8_t>;

// Colour 1 drops to 0, the rest unchanged (the fractional-part reduction).
Colouring3 reduce(const Colouring4& c4);

struct SurfaceStats {
    long m0 = 0;      // edges coloured 1/2
    long m1 = 0;      // triangles of type (0,1/2,1/2)
    long m_tri = 0;   // tetrahedra of triangle type
    long m_quad = 0;  // tetrahedra of quad type
    long chi = 0;     // m0 - m1 + m_tri + m_quad
};

// Throws std::invalid_argument if theta is not admissible.
SurfaceStats surface_stats(const Triangulation& t, const Colouring3& theta);

struct EdgePartition {
    // 0: coloured 1/2; 1: coloured 0, in some (0,0,0) triangle;
    // 2: coloured 0, only in (0,1/2,1/2) triangles.
    std::vector<int> kind;       // per edge class
    std::vector<int> e1, e2;     // edge classes in each group, ascending
    std::vector<int> coord;      // edge class -> coordinate in E1|E2, or -1
};

EdgePartition edge_partition(const Triangulation& t, const Colouring3& theta);

// M parameterises the lifts A_theta: columns are a kernel basis of the
// (0,0,0)-triangle system over E1 (zero-extended) followed by unit vectors
// on the E2 coordinates. m is the kernel dimension.
std::pair<Z2Matrix, std::size_t> colouring_space(const Triangulation& t,
                                                 const Colouring3& theta,
                                                 const EdgePartition& part);

// R = M^T Q M where Q toggles the opposite 0-edge pair of each quad-type
// tetrahedron (diagonal entry when the pair is a single edge class).
QuadraticFormZ2 octagon_form(const Triangulation& t, const Colouring3& theta,
                             const EdgePartition& part, const Z2Matrix& m);

struct ClassRecord {
    Colouring3 theta;
    SurfaceStats stats;
    std::size_t dim = 0;  // m + |E2|
    BigInt n0;            // zeros of the octagon form
    DyadicSqrt2 contribution;
};

ClassRecord class_contribution(const Triangulation& t, const Colouring3& theta, int q);

struct TVReport {
    int q = 1;
    bool z_negative = true;
    int n = 0, v = 0, e = 0;
    int beta1 = 0;
    bool multi_vertex_warning = false;
    std::size_t class_count = 0;

    std::vector<ClassRecord> records;  // enumeration order

    DyadicSqrt2 raw, normalized;                 // normalized = raw / 4^v
    std::array<DyadicSqrt2, 3> triple_raw;       // nu = 0,1,2; sums to raw
    std::array<DyadicSqrt2, 3> triple;           // normalized buckets
    LaurentZ poly;                               // P_T(z), a_chi coefficients
    std::map<long, BigInt> b_plus, b_minus;      // per chi
};

// jobs <= 0 means hardware concurrency.
TVReport tv4_compute(const Triangulation& t, int q, int jobs = 1);

// b+_m (even) or b-_m (odd) without enumerating colourings.
BigInt count_by_chi_parity(const Triangulation& t, long m, bool even);

inline bool z_is_negative(int q) {
    if (q != 1 && q != 3 && q != 5 && q != 7)
        throw std::invalid_argument("tv4: q must be one of 1, 3, 5, 7");
    return q == 1 || q == 7;
}

}  // namespace tv4q
