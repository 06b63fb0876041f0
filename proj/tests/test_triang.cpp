#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "tv4q/homology.hpp"
#include "tv4q/triangulation.hpp"

using namespace tv4q;
using tv4q::testing::corpus;
using tv4q::testing::double_tetrahedron;
using tv4q::testing::first_movable_triangle;

TEST_CASE("perm4 basics") {
    Perm4 a(1, 2, 3, 0), b(0, 2, 1, 3);
    CHECK(a.then(b)(0) == 2);  // b(a(0)) = b(1)
    CHECK(a.then(a.inverse()) == Perm4());
    CHECK(a.inverse().then(a) == Perm4());
    CHECK_THROWS_AS(Perm4(0, 0, 1, 2), std::invalid_argument);

    for (int s = 0; s < 6; ++s) {
        auto [x, y] = kEdgeSlotVertices[s];
        CHECK(edge_slot(x, y) == s);
        CHECK(edge_slot(y, x) == s);
        // Opposite slots share no vertex.
        auto [u, w] = kEdgeSlotVertices[kOppositeSlot[s]];
        CHECK(u != x);
        CHECK(u != y);
        CHECK(w != x);
        CHECK(w != y);
    }
    CHECK_THROWS_AS(edge_slot(2, 2), std::invalid_argument);
}

TEST_CASE("skeleton of the double tetrahedron") {
    Triangulation t = double_tetrahedron();
    CHECK(t.tet_count() == 2);
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 6);
    CHECK(t.triangle_count() == 4);
    CHECK(!t.has_boundary());
    CHECK(!t.has_reversed_edge());

    // Despite gluing every facet by the identity, this is a genuine closed
    // triangulation: the double of a tetrahedron, i.e. the 4-vertex S^3.
    ClosedCheck c = check_closed_manifold(t);
    CHECK(c.ok);
    CHECK(c.v == 4);
    CHECK(c.e == 6);
    CHECK(c.beta0 == 1);
}

TEST_CASE("parsing and round trips") {
    CHECK_THROWS_AS(parse_triangulation(""), ParseError);
    CHECK_THROWS_AS(parse_triangulation("tets x\n"), ParseError);
    CHECK_THROWS_AS(parse_triangulation("tets 1\n0:0123 - - -\n- - - -\n"), ParseError);
    CHECK_THROWS_AS(parse_triangulation("tets 2\n1:0123 - - -\n- - - -\n"), ParseError);  // asymmetric
    CHECK_THROWS_AS(parse_triangulation("tets 1\n5:0123 - - -\n"), ParseError);   // tet out of range
    CHECK_THROWS_AS(parse_triangulation("tets 1\n0:0113 - - -\n"), ParseError);   // not a permutation
    CHECK_THROWS_AS(parse_triangulation("tets 1\n0:0123 - -\n"), ParseError);     // short row

    // Boundary parses fine; the closed check reports it.
    Triangulation solo = parse_triangulation("tets 1\n- - - -\n");
    CHECK(solo.has_boundary());
    CHECK(!check_closed_manifold(solo).ok);

    for (const auto& [name, t] : corpus()) {
        CAPTURE(name);
        Triangulation back = parse_triangulation(to_tri(t));
        CHECK(back.tet_count() == t.tet_count());
        for (int i = 0; i < t.tet_count(); ++i)
            for (int f = 0; f < 4; ++f) CHECK(back.gluing(i, f) == t.gluing(i, f));
    }
}

TEST_CASE("closed-check counts across the corpus") {
    for (const auto& [name, t] : corpus()) {
        CAPTURE(name);
        ClosedCheck c = check_closed_manifold(t);
        CHECK(c.ok);
        CHECK(c.beta0 == 1);
        CHECK(c.v == t.vertex_count());
        CHECK(c.e == t.edge_count());
        // Closed: f = 2n and euler characteristic v - e + f - n = 0.
        CHECK(t.triangle_count() == 2 * t.tet_count());
        CHECK(t.vertex_count() - t.edge_count() + t.triangle_count() - t.tet_count() == 0);
        CHECK(t.edge_count() == t.tet_count() + t.vertex_count());

        // Edge embeddings partition the 6n slots; signs are consistent.
        std::size_t slots = 0;
        for (int ec = 0; ec < t.edge_count(); ++ec) {
            slots += t.edge_embeddings(ec).size();
            auto [rt, rs] = t.edge_representative(ec);
            CHECK(t.edge_class(rt, rs) == ec);
            CHECK(t.edge_sign(rt, rs) == 1);
        }
        CHECK(slots == static_cast<std::size_t>(6 * t.tet_count()));
        for (int tc = 0; tc < t.triangle_count(); ++tc)
            CHECK(t.triangle_embeddings(tc).size() == 2);
    }
}

TEST_CASE("2-3 moves") {
    // A triangle contained twice in the same tetrahedron is not movable.
    Triangulation one = generate_lens_space(1, 0);
    CHECK(first_movable_triangle(one) == -1);
    CHECK_THROWS_AS(pachner_23(one, 0), std::invalid_argument);

    std::mt19937 rng(99);
    for (long p : {2L, 3L, 8L}) {
        Triangulation t = generate_lens_space(p, 1);
        for (int step = 0; step < 6; ++step) {
            std::vector<int> movable;
            for (int tc = 0; tc < t.triangle_count(); ++tc) {
                const auto& em = t.triangle_embeddings(tc);
                if (em.size() == 2 && em[0].first != em[1].first) movable.push_back(tc);
            }
            REQUIRE(!movable.empty());
            int pick = movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)];
            Triangulation moved = pachner_23(t, pick);

            CHECK(moved.tet_count() == t.tet_count() + 1);
            CHECK(moved.vertex_count() == t.vertex_count());
            CHECK(moved.edge_count() == t.edge_count() + 1);
            CHECK(check_closed_manifold(moved).ok);
            CHECK(betti_z2(moved) == betti_z2(t));
            t = std::move(moved);
        }
    }
}

TEST_CASE("lens space generator") {
    CHECK_THROWS_AS(generate_lens_space(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_lens_space(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_lens_space(5, 5), std::invalid_argument);

    struct Expect {
        long p, q;
    };
    for (Expect x : {Expect{5, 1}, Expect{8, 1}, Expect{16, 1}, Expect{7, 2}, Expect{13, 5}}) {
        Triangulation t = generate_lens_space(x.p, x.q);
        ClosedCheck c = check_closed_manifold(t);
        CHECK(c.ok);
        CHECK(c.v == 1);
        CHECK(t.edge_count() == t.tet_count() + 1);
        IntegralH1 h = integral_h1(t);
        CHECK(h.free_rank == 0);
        REQUIRE(h.torsion.size() == 1);
        CHECK(h.torsion[0] == BigInt(x.p));
    }

    // L(1,0) and L(2,1) are the familiar one- and two-tetrahedron spaces.
    CHECK(generate_lens_space(1, 0).tet_count() == 1);
    Triangulation rp3 = generate_lens_space(2, 1);
    CHECK(integral_h1(rp3).torsion == std::vector<BigInt>{2});
}
