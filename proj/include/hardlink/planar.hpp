#pragma once

#include <stdexcept>
#include <vector>

#include "hardlink/diagram.hpp"

namespace hardlink {

// A closed polyline with per-segment depth levels and provenance tags.
// Segment i runs pts[i] -> pts[(i+1) % pts.size()]. At each transversal
// intersection the segment with the strictly larger level passes over.
struct CurveInput {
    std::vector<Pt> pts;
    std::vector<int> level;
    std::vector<int> tag;
    Role role;
};

struct PlanarCrossing {
    int curve_under = -1, seg_under = -1;
    int curve_over = -1, seg_over = -1;
    int tag_under = 0, tag_over = 0;
    PtD pos;
};

struct Planarized {
    LinkDiagram diagram;
    DiagramLayout layout;
    std::vector<PlanarCrossing> crossings;  // index-aligned with diagram.crossings
    // per curve, per polyline vertex: id of the arc whose interior covers it
    // (-1 for crossing-free curves).
    std::vector<std::vector<int>> vertex_arc;
};

// Raised on any geometric degeneracy: touching endpoints, collinear overlap,
// triple points, equal levels at an intersection. Constructions treat this as
// a signal to retry with a different layout salt.
class GeometryError : public std::runtime_error {
  public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Compile closed curves into a link diagram plus layout. Curve i becomes
// component i; curves without intersections become free loops.
Planarized planarize(const std::vector<CurveInput>& curves);

}  // namespace hardlink
