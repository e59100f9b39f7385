#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hardlink/geom.hpp"

namespace hardlink {

// Component role tags carried through constructions and serialization.
enum class RoleKind {
    Plain,
    VariableDisc,
    ExtraDisc,
    SentenceStrand,
    VertexTrefoil,
    EdgeLoop,
};

struct Role {
    RoleKind kind = RoleKind::Plain;
    int index = -1;  // 1-based parameter for the parametrized kinds

    std::string str() const;
    static Role parse(const std::string& s);

    friend bool operator==(const Role& a, const Role& b) {
        return a.kind == b.kind && a.index == b.index;
    }
};

// One of the two ends of an arc. `end` 0 is the tail, 1 the head; the
// reference orientation of every arc runs tail -> head.
struct ArcEnd {
    int arc = -1;
    int end = 0;

    friend bool operator==(ArcEnd a, ArcEnd b) { return a.arc == b.arc && a.end == b.end; }
    friend bool operator<(ArcEnd a, ArcEnd b) {
        return a.arc != b.arc ? a.arc < b.arc : a.end < b.end;
    }
};

// Four arc-ends listed counterclockwise starting at the incoming
// under-strand. Slot 0 therefore holds a head (end 1), slot 2 the matching
// tail, and exactly one of slots 1/3 holds the incoming over-strand head.
struct Crossing {
    std::array<ArcEnd, 4> slot;
};

struct LinkDiagram {
    int num_arcs = 0;
    int free_loops = 0;  // zero-crossing circle components, stored without arcs
    int num_components = 0;
    std::vector<Crossing> crossings;
    std::vector<int> component_of;  // arc -> component id
    std::vector<Role> role_of;      // component id -> role

    const ArcEnd& under_in(int c) const { return crossings[c].slot[0]; }
    const ArcEnd& under_out(int c) const { return crossings[c].slot[2]; }
    int over_in_slot(int c) const { return crossings[c].slot[3].end == 1 ? 3 : 1; }
    const ArcEnd& over_in(int c) const { return crossings[c].slot[over_in_slot(c)]; }
    const ArcEnd& over_out(int c) const { return crossings[c].slot[over_in_slot(c) ^ 2]; }

    // +1 when, under the reference orientations, the (over, under) tangent
    // frame is positively rotated; the right-handed convention.
    int ref_sign(int c) const { return over_in_slot(c) == 3 ? 1 : -1; }
};

// Direction flag per component relative to the reference orientation.
struct Orientation {
    std::vector<int> dir;  // +1 or -1 per component

    static Orientation all_positive(int n) { return {std::vector<int>(size_t(n), 1)}; }
};

struct ValidationIssue {
    std::string check;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
    int total_faces = 0;
    // per connected piece of the underlying 4-valent graph: (crossings, faces)
    std::vector<std::pair<int, int>> piece_faces;

    void fail(const std::string& check, const std::string& detail) {
        ok = false;
        issues.push_back({check, detail});
    }
};

struct LinkingMatrix {
    int n = 0;
    std::vector<i64> entries;  // row-major n*n, symmetric, zero diagonal

    i64 at(int i, int j) const { return entries[size_t(i) * n + j]; }
    i64& at(int i, int j) { return entries[size_t(i) * n + j]; }
};

ValidationReport validate(const LinkDiagram& d);

// Arc cycles per component, in strand order; empty for free loops.
// Throws std::invalid_argument on an invalid diagram.
std::vector<std::vector<int>> components(const LinkDiagram& d);

std::vector<int> signed_crossings(const LinkDiagram& d, const Orientation& o);

LinkingMatrix linking_matrix(const LinkDiagram& d, const Orientation& o);

// Standard closed 2-braid diagram of the (2,q) torus knot, q odd >= 3.
// All crossings are right-handed.
LinkDiagram torus_knot_diagram(int q);

// Four blackboard-framed parallel copies of a knot diagram. Every crossing
// becomes a 4x4 grid of 16 crossings; the copies stay separate components,
// each traversing the pattern once.
LinkDiagram cable4(const LinkDiagram& knot);

// ---- rendering ----

struct DiagramLayout {
    std::vector<std::vector<PtD>> arc_path;  // per arc, endpoints at crossings
    std::map<int, std::vector<PtD>> loop_path;  // free-loop component -> closed polyline
    std::vector<PtD> crossing_pos;
    double stroke = 2.0;
    double under_gap = 6.0;
};

struct SvgOptions {
    std::set<int> bold_components;
    std::string title;
};

// Deterministic SVG with under-strand breaks at every crossing and bold
// styling for a designated component subset.
std::string render_svg(const LinkDiagram& d, const DiagramLayout& layout,
                       const SvgOptions& opts = {});

}  // namespace hardlink
