#include "doctest.h"
#include "hardlink/diagram_io.hpp"
#include "hardlink/hamlink.hpp"
#include "hardlink/satlink.hpp"
#include "support.hpp"

using namespace hardlink;

TEST_CASE("diagram json round trip is byte exact") {
    LinkDiagram tref = torus_knot_diagram(3);
    std::string text = diagram_to_json(tref);
    ParsedDiagram back = diagram_from_json(text);
    CHECK(validate(back.diagram).ok);
    CHECK(diagram_to_json(back.diagram) == text);
    CHECK(!back.layout.has_value());

    // With layout attached.
    Planarized p = testsupport::planar_trefoil();
    std::string with_layout = diagram_to_json(p.diagram, &p.layout);
    ParsedDiagram back2 = diagram_from_json(with_layout);
    REQUIRE(back2.layout.has_value());
    CHECK(diagram_to_json(back2.diagram, &*back2.layout) == with_layout);
    CHECK(render_svg(back2.diagram, *back2.layout) == render_svg(p.diagram, p.layout));
}

TEST_CASE("built links round trip through json") {
    SatLink sl = build_link(parse_instance("p i3sat 2 1\n1 -2 1\n"));
    std::string text = diagram_to_json(sl.diagram, &sl.layout);
    ParsedDiagram back = diagram_from_json(text);
    CHECK(validate(back.diagram).ok);
    CHECK(back.diagram.num_components == sl.diagram.num_components);
    CHECK(diagram_to_json(back.diagram, &*back.layout) == text);
    CHECK(back.diagram.role_of[0].kind == RoleKind::VariableDisc);
    CHECK(back.diagram.role_of[2].kind == RoleKind::ExtraDisc);
}

TEST_CASE("free loops survive serialization") {
    LinkDiagram d;
    d.free_loops = 2;
    d.num_components = 2;
    d.role_of.assign(2, Role{});
    ParsedDiagram back = diagram_from_json(diagram_to_json(d));
    CHECK(back.diagram.free_loops == 2);
    CHECK(back.diagram.num_components == 2);
}

TEST_CASE("corrupt diagram files are rejected") {
    CHECK_THROWS_AS(diagram_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(diagram_from_json("{\"format\":\"other\"}"), std::invalid_argument);
    std::string good = diagram_to_json(torus_knot_diagram(3));
    // Clobber an arc reference beyond range.
    std::string bad = good;
    auto at = bad.find("crossings");
    bad.replace(bad.find('1', at), 1, "9");
    CHECK_THROWS_AS(diagram_from_json(bad), std::invalid_argument);
}

TEST_CASE("role strings round trip") {
    for (Role r : {Role{}, Role{RoleKind::VariableDisc, -1}, Role{RoleKind::ExtraDisc, -1},
                   Role{RoleKind::SentenceStrand, 2}, Role{RoleKind::VertexTrefoil, 7},
                   Role{RoleKind::EdgeLoop, 11}})
        CHECK(Role::parse(r.str()) == r);
    CHECK_THROWS_AS(Role::parse("mystery"), std::invalid_argument);
}
