// Shared corpus of small closed triangulations for the test suites.

#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tv4q/triangulation.hpp"

namespace tv4q::testing {

inline Triangulation double_tetrahedron() {
    return parse_triangulation(
        "tets 2\n"
        "1:0123 1:0123 1:0123 1:0123\n"
        "0:0123 0:0123 0:0123 0:0123\n");
}

inline int first_movable_triangle(const Triangulation& t) {
    for (int tc = 0; tc < t.triangle_count(); ++tc) {
        const auto& em = t.triangle_embeddings(tc);
        if (em.size() == 2 && em[0].first != em[1].first) return tc;
    }
    return -1;
}

// Closed triangulations with at most five tetrahedra: small lens spaces,
// the double of a tetrahedron (a 4-vertex S^3), and 2-3-move expansions.
inline const std::vector<std::pair<std::string, Triangulation>>& corpus() {
    static const std::vector<std::pair<std::string, Triangulation>> fixtures = [] {
        std::vector<std::pair<std::string, Triangulation>> out;
        for (long p = 1; p <= 13; ++p)
            for (long q = 1; q <= (p == 1 ? 1 : p - 1); ++q) {
                if (std::gcd(p, q) != 1) continue;
                long qq = p == 1 ? 0 : q;
                Triangulation t = generate_lens_space(p, qq);
                if (t.tet_count() <= 5)
                    out.emplace_back("L(" + std::to_string(p) + "," + std::to_string(qq) + ")",
                                     std::move(t));
                if (p == 1) break;
            }
        out.emplace_back("S3_double_tet", double_tetrahedron());
        std::size_t baseCount = out.size();
        for (std::size_t i = 0; i < baseCount; ++i) {
            Triangulation t = out[i].second;
            for (int step = 1; t.tet_count() < 5; ++step) {
                int tc = first_movable_triangle(t);
                if (tc < 0) break;
                t = pachner_23(t, tc);
                out.emplace_back(out[i].first + "+23x" + std::to_string(step), t);
            }
        }
        return out;
    }();
    return fixtures;
}

}  // namespace tv4q::testing
