#include <map>
#include <set>

#include "doctest.h"
#include "hardlink/hamlink.hpp"
#include "support.hpp"

using namespace hardlink;

namespace {

SimpleGraph simple(int n, std::vector<std::pair<int, int>> edges) {
    FiniteGraph g;
    g.n = n;
    g.edges = std::move(edges);
    return simplify(g);
}

SimpleGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return simple(n, std::move(e));
}

std::map<std::pair<int, int>, int> census(const HamLink& hl) {
    std::map<std::pair<int, int>, int> out;
    for (const PlanarCrossing& c : hl.crossing_info) {
        int ka = c.tag_under & 0xff, kb = c.tag_over & 0xff;
        if (ka > kb) std::swap(ka, kb);
        ++out[{ka, kb}];
    }
    return out;
}

}  // namespace

TEST_CASE("simplify removes loops and parallel edges") {
    SimpleGraph tri = simple(3, {{0, 1}, {1, 2}, {0, 2}, {1, 1}});
    CHECK(tri.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

    SimpleGraph dbl = simple(2, {{0, 1}, {1, 0}});
    CHECK(dbl.edges == std::vector<std::pair<int, int>>{{0, 1}});

    SimpleGraph plain = simple(3, {{0, 1}});
    CHECK(plain.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("chord layout crossing counts") {
    CHECK(layout(complete(4)).crossing_count == 1);
    CHECK(layout(complete(5)).crossing_count == 5);
    CHECK(layout(simple(4, {{0, 1}, {1, 2}, {2, 3}})).crossing_count == 0);
}

TEST_CASE("single vertex is one trefoil") {
    HamLink hl = build_link(simple(1, {}));
    CHECK(hl.diagram.num_components == 1);
    CHECK(hl.diagram.crossings.size() == 3);
    CHECK(validate(hl.diagram).ok);
    CHECK(hl.diagram.role_of[0].kind == RoleKind::VertexTrefoil);
    // The lone trefoil meets the n^4+2 bound with equality.
    CHECK(i64(hl.diagram.crossings.size()) == 1 + 2);
    // Right-handed at the vertex.
    for (int s : signed_crossings(hl.diagram, Orientation::all_positive(1))) CHECK(s == 1);
}

TEST_CASE("one edge: three components and ten crossings") {
    HamLink hl = build_link(simple(2, {{0, 1}}));
    CHECK(hl.diagram.num_components == 3);
    CHECK(hl.diagram.crossings.size() == 10);  // 2 trefoils + 2 clasps
    CHECK(validate(hl.diagram).ok);
    auto c = census(hl);
    CHECK(c[{kTagBlock, kTagBlock}] == 6);
    CHECK(c[{kHamTagCollar, kHamTagHook}] == 4);

    IncidenceCheck inc = verify_incidence_linking(hl.graph, hl);
    CHECK(inc.ok);
    LinkingMatrix lk = linking_matrix(hl.diagram, Orientation::all_positive(3));
    CHECK(std::abs(lk.at(0, 2)) == 1);
    CHECK(std::abs(lk.at(1, 2)) == 1);
    CHECK(lk.at(0, 1) == 0);
}

TEST_CASE("two disjoint edges have no stray linking") {
    HamLink hl = build_link(simple(4, {{0, 1}, {2, 3}}));
    CHECK(hl.diagram.num_components == 6);
    CHECK(verify_incidence_linking(hl.graph, hl).ok);
}

TEST_CASE("complete graph on five vertices") {
    HamLink hl = build_link(complete(5));
    CHECK(hl.diagram.num_components == 15);
    CHECK(validate(hl.diagram).ok);
    // 3n + 4E + 4X = 15 + 40 + 20 crossings, comfortably under n^4 + 2.
    CHECK(hl.diagram.crossings.size() == 75);
    CHECK(i64(hl.diagram.crossings.size()) <= 5ll * 5 * 5 * 5 + 2);
    auto c = census(hl);
    CHECK(c[{kTagBlock, kTagBlock}] == 15);
    CHECK(c[{kHamTagCollar, kHamTagHook}] == 40);
    CHECK(c[{kHamTagChord, kHamTagChord}] == 20);
    CHECK(verify_incidence_linking(hl.graph, hl).ok);
}

TEST_CASE("hamiltonian brute force") {
    auto path4 = hamiltonian_bruteforce(simple(4, {{0, 1}, {1, 2}, {2, 3}}));
    REQUIRE(path4.has_value());
    CHECK(*path4 == std::vector<int>{0, 1, 2, 3});

    auto star = hamiltonian_bruteforce(simple(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(!star.has_value());

    auto k5 = hamiltonian_bruteforce(complete(5));
    REQUIRE(k5.has_value());
    CHECK(k5->size() == 5);

    CHECK(hamiltonian_bruteforce(simple(1, {})) == std::vector<int>{0});
    CHECK(!hamiltonian_bruteforce(simple(2, {})).has_value());

    SimpleGraph big;
    big.n = 11;
    CHECK_THROWS_AS(hamiltonian_bruteforce(big), std::invalid_argument);
}

TEST_CASE("path to sublink component counts") {
    HamLink k5 = build_link(complete(5));
    auto path = hamiltonian_bruteforce(k5.graph);
    REQUIRE(path.has_value());
    auto sub = path_to_sublink(k5, *path);
    CHECK(sub.size() == 9);
    CHECK(check_string_of_trefoils(k5, sub));

    HamLink single = build_link(simple(1, {}));
    CHECK(path_to_sublink(single, {0}) == std::vector<int>{0});
    CHECK(check_string_of_trefoils(single, {0}));

    HamLink p3 = build_link(simple(3, {{0, 1}, {1, 2}}));
    auto sub3 = path_to_sublink(p3, {0, 1, 2});
    CHECK(sub3.size() == 5);
    CHECK(check_string_of_trefoils(p3, sub3));

    CHECK_THROWS_AS(path_to_sublink(p3, std::vector<int>{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(path_to_sublink(p3, std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("string-of-trefoils rejections") {
    HamLink star = build_link(simple(4, {{0, 1}, {0, 2}, {0, 3}}));
    // A degree-3 hub: not a path.
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
    CHECK(!check_string_of_trefoils(star, all));
    // Even-size subsets and duplicates never qualify.
    CHECK(!check_string_of_trefoils(star, {0, 4}));
    CHECK(!check_string_of_trefoils(star, {0, 0, 1}));
    // A lone edge loop is not a trefoil.
    CHECK(!check_string_of_trefoils(star, {4}));
    // Disconnected trefoil-only subsets fail.
    CHECK(!check_string_of_trefoils(star, {0, 1, 2}));
}

TEST_CASE("find_string_sublink matches the oracle") {
    HamLink k5 = build_link(complete(5));
    auto sub = find_string_sublink(k5);
    REQUIRE(sub.has_value());
    CHECK(sub->size() == 9);
    CHECK(check_string_of_trefoils(k5, *sub));

    HamLink star = build_link(simple(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(!find_string_sublink(star).has_value());

    HamLink two = build_link(simple(2, {}));
    CHECK(!find_string_sublink(two).has_value());
}

TEST_CASE("exhaustive subsets: no spurious strings on small graphs") {
    // Every subset passing the check decodes to a Hamiltonian path.
    for (auto g : {simple(3, {{0, 1}, {1, 2}}), simple(3, {{0, 1}, {1, 2}, {0, 2}}),
                   simple(4, {{0, 1}, {0, 2}, {0, 3}}), complete(4)}) {
        HamLink hl = build_link(g);
        bool has_path = hamiltonian_bruteforce(g).has_value();
        int total = hl.diagram.num_components;
        bool any_full_string = false;
        for (unsigned mask = 1; mask < (1u << total); ++mask) {
            std::vector<int> subset;
            for (int c = 0; c < total; ++c)
                if ((mask >> c) & 1u) subset.push_back(c);
            if (int(subset.size()) != 2 * g.n - 1) continue;
            if (check_string_of_trefoils(hl, subset)) any_full_string = true;
        }
        CHECK(any_full_string == has_path);
    }
}
