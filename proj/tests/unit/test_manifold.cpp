#include <algorithm>
#include <random>

#include "doctest.h"
#include "hardlink/manifold.hpp"

using namespace hardlink;

namespace {

FiniteGraph graph_of(int n, std::vector<std::pair<int, int>> edges) {
    FiniteGraph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

}  // namespace

TEST_CASE("perm4 basics") {
    Perm4 p{{1, 2, 3, 0}};
    CHECK(p.inverse() == Perm4{{3, 0, 1, 2}});
    CHECK(p.parity() == 1);
    CHECK(Perm4{}.parity() == 0);
    CHECK(Perm4::parse("1230") == p);
    CHECK(p.str() == "1230");
    CHECK_THROWS_AS(Perm4::parse("1123"), std::invalid_argument);
}

TEST_CASE("closed piece: thickened torus cross circle") {
    Piece p = build_piece(0);
    CHECK(p.tri.tet_count == 6);
    CHECK(p.boundary.empty());
    TriangulationReport rep = validate_triangulation(p.tri);
    CHECK(rep.gluings_ok);
    CHECK(rep.closed);
    CHECK(rep.orientable);
    CHECK(rep.euler == 0);
}

TEST_CASE("pieces with boundary") {
    for (int d = 1; d <= 4; ++d) {
        Piece p = build_piece(d);
        CHECK(p.tri.tet_count == 9 * d + 6);
        CHECK(int(p.boundary.size()) == d);
        TriangulationReport rep = validate_triangulation(p.tri);
        CHECK(rep.gluings_ok);
        CHECK(!rep.closed);
        CHECK(rep.orientable);
        CHECK(rep.euler == 0);
    }
    // Affine growth: three extra surface triangles, nine extra tetrahedra
    // per boundary circle.
    CHECK(build_piece(3).tri.tet_count - build_piece(2).tri.tet_count == 9);
    CHECK(build_piece(2).surface_triangles - build_piece(1).surface_triangles == 3);
}

TEST_CASE("boundary tori are two-triangle marked tori") {
    Piece p = build_piece(2);
    for (const MarkedTorus& mt : p.boundary) {
        // Both faces unglued, distinct, and sharing the diagonal corners.
        CHECK(!p.tri.at(mt.lower.tet, mt.lower.face).has_value());
        CHECK(!p.tri.at(mt.upper.tet, mt.upper.face).has_value());
        CHECK((mt.lower.tet != mt.upper.tet || mt.lower.face != mt.upper.face));
    }
    // Exactly 2d boundary faces in the whole complex.
    int open = 0;
    for (int t = 0; t < p.tri.tet_count; ++t)
        for (int f = 0; f < 4; ++f)
            if (!p.tri.at(t, f)) ++open;
    CHECK(open == 4);
}

TEST_CASE("single vertex yields a closed orientable manifold with H1 = Z^3") {
    Triangulation t = build_manifold(graph_of(1, {}));
    TriangulationReport rep = validate_triangulation(t);
    CHECK(rep.closed);
    CHECK(rep.orientable);
    CHECK(rep.euler == 0);
    H1 h = h1(t);
    CHECK(h.free_rank == 3);
    CHECK(h.torsion.empty());
}

TEST_CASE("one edge joining two vertices") {
    Triangulation t = build_manifold(graph_of(2, {{0, 1}}));
    CHECK(t.tet_count == 2 * 15);
    TriangulationReport rep = validate_triangulation(t);
    CHECK(rep.closed);
    CHECK(rep.orientable);
    CHECK(rep.euler == 0);
}

TEST_CASE("loops and multi-edges glue within and between pieces") {
    for (auto g : {graph_of(1, {{0, 0}}), graph_of(2, {{0, 1}, {0, 1}}),
                   graph_of(2, {{0, 0}, {0, 1}, {1, 1}})}) {
        Triangulation t = build_manifold(g);
        TriangulationReport rep = validate_triangulation(t);
        CHECK(rep.gluings_ok);
        CHECK(rep.closed);
        CHECK(rep.orientable);
        CHECK(rep.euler == 0);
    }
}

TEST_CASE("disjoint union adds homology ranks") {
    H1 two = h1(build_manifold(graph_of(2, {})));
    CHECK(two.free_rank == 6);
    CHECK(two.torsion.empty());
}

TEST_CASE("unglued piece is not closed but has zero euler characteristic") {
    Piece p = build_piece(2);
    TriangulationReport rep = validate_triangulation(p.tri);
    CHECK(!rep.closed);
    CHECK(rep.euler == 0);
}

TEST_CASE("an orientation-preserving torus gluing breaks orientability") {
    Piece p = build_piece(2);
    glue_marked_tori(p.tri, p.boundary[0], p.boundary[1], {3, 2, 1, 0});
    TriangulationReport rep = validate_triangulation(p.tri);
    CHECK(rep.gluings_ok);
    CHECK(rep.closed);
    CHECK(!rep.orientable);
}

TEST_CASE("relabeling vertices preserves the invariant tuple") {
    FiniteGraph g = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
    Triangulation t = build_manifold(g);
    H1 h = h1(t);

    std::mt19937_64 rng(99);
    std::vector<int> perm{0, 1, 2, 3};
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        FiniteGraph r;
        r.n = g.n;
        for (auto [u, v] : g.edges) r.edges.push_back({perm[size_t(u)], perm[size_t(v)]});
        std::sort(r.edges.begin(), r.edges.end());
        Triangulation t2 = build_manifold(r);
        CHECK(t2.tet_count == t.tet_count);
        CHECK(h1(t2) == h);
    }
}

TEST_CASE("triangulation text round trip") {
    Triangulation t = build_manifold(graph_of(2, {{0, 1}}));
    std::string text = format_triangulation(t);
    Triangulation back = parse_triangulation(text);
    CHECK(back == t);
    CHECK(format_triangulation(back) == text);

    CHECK_THROWS_AS(parse_triangulation("tets"), std::invalid_argument);
    CHECK_THROWS_AS(parse_triangulation("tets 2\n0 0 : 0 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_triangulation("tets 2\n0 0 : 0 0 0123"), std::invalid_argument);
}

TEST_CASE("graph text round trip") {
    FiniteGraph g = parse_graph("3\n1 2\n2 3\n3 3\n");
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 3);
    CHECK(g.edges[2] == std::pair<int, int>{2, 2});
    CHECK(format_graph(g) == "3\n1 2\n2 3\n3 3\n");
    CHECK_THROWS_AS(parse_graph("2\n1 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2\n1\n"), std::invalid_argument);
}
