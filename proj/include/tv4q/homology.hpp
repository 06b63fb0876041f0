// Z2 chain-complex homology, the Adm(T,3) cocycle space, and integral
// first homology via Smith normal form.

#pragma once

#include "tv4q/triangulation.hpp"
#include "tv4q/z2.hpp"

namespace tv4q {

// Boundary matrices over Z2: d1 is vertices x edges, d2 is edges x triangles,
// d3 is triangles x tets. Entries are incidence counts mod 2.
struct ChainComplexZ2 {
    Z2Matrix d1, d2, d3;
};

ChainComplexZ2 chain_complex_z2(const Triangulation& t);

// (beta0, beta1) with Z2 coefficients.
std::pair<int, int> betti_z2(const Triangulation& t);

// Basis of {theta: E -> Z2 : every triangle's edge values sum to 0 mod 2},
// incidences counted with multiplicity. Vectors are indexed by edge class.
std::vector<Z2Vector> adm3_basis(const Triangulation& t);

struct IntegralH1 {
    std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
    int free_rank = 0;
};

IntegralH1 integral_h1(const Triangulation& t);

// Integer boundary matrices (orientation signs from the skeleton's
// low-to-high edge convention); exposed for direct dd=0 checks.
std::vector<std::vector<long long>> boundary1_z(const Triangulation& t);
std::vector<std::vector<long long>> boundary2_z(const Triangulation& t);

// Invariant factors (>1 only) of an integer matrix, in divisibility order.
std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<long long>> m,
                                            int* rank_out = nullptr);

}  // namespace tv4q
