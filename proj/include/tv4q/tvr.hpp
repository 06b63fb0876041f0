// Brute-force state-sum oracles: general TV_{r,q} in complex arithmetic via
// the quantum-integer weight formulas, and an exact enumeration for r = 4.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>

#include "tv4q/dyadic.hpp"
#include "tv4q/triangulation.hpp"

namespace tv4q {

// Edge colours are stored doubled: an edge of colour i in
// I = {0, 1/2, ..., (r-2)/2} carries the integer 2i in {0, ..., r-2}.
class QuantumRing {
public:
    QuantumRing(int r, int q);

    int r() const { return r_; }
    int q() const { return q_; }
    std::complex<double> zeta() const { return zeta_; }

    // [i] with [0] = 1, and the bracket factorial [i]!.
    std::complex<double> bracket(int i) const { return brk_.at(static_cast<std::size_t>(i)); }
    std::complex<double> bracket_fact(int i) const {
        return fact_.at(static_cast<std::size_t>(i));
    }

private:
    int r_, q_;
    std::complex<double> zeta_;
    std::vector<std::complex<double>> brk_, fact_;
};

bool triangle_admissible(int r, int di, int dj, int dk);

std::complex<double> weight_vertex(const QuantumRing& ring);
std::complex<double> weight_edge(const QuantumRing& ring, int dcolour);
std::complex<double> weight_triangle(const QuantumRing& ring, int di, int dj, int dk);
// Slot colours i0..i5 in the edge-slot convention (opposite pairs
// (0,5),(1,4),(2,3)), doubled.
std::complex<double> weight_tet(const QuantumRing& ring, const std::array<int, 6>& d);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 387420489ULL;  // 3^18

// Full state sum including vertex weights, by backtracking over edge
// colourings with per-triangle pruning.
std::complex<double> tv_r_bruteforce(const Triangulation& t, int r, int q,
                                     std::uint64_t budget = kDefaultBudget);

struct BruteResult {
    DyadicSqrt2 raw;        // sum of (-1)^alpha z^chi over Adm(T,4)
    DyadicSqrt2 raw_gamma;  // same sum with the sign recomputed face by face
    std::map<long, BigInt> b_plus, b_minus;  // colouring counts per chi, by parity
    BigInt colourings;                       // |Adm(T,4)|
};

BruteResult tv4_bruteforce_exact(const Triangulation& t, int q,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace tv4q
