#include "hardlink/planar.hpp"

#include <algorithm>
#include <unordered_map>

namespace hardlink {

namespace {

struct Seg {
    int curve, idx;
    Pt a, b;
    int level, tag;
};

struct Hit {
    // One passage of a curve through a crossing.
    int seg;  // segment index within the curve
    Frac t;
    int crossing;
    bool is_under;
    QPt point;
};

std::string at_point(Pt p) {
    return " near (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

Planarized planarize(const std::vector<CurveInput>& curves) {
    for (const CurveInput& c : curves) {
        if (c.pts.size() < 3) throw std::invalid_argument("curve needs at least 3 points");
        if (c.level.size() != c.pts.size() || c.tag.size() != c.pts.size())
            throw std::invalid_argument("per-segment metadata size mismatch");
        for (size_t i = 0; i < c.pts.size(); ++i) {
            check_coord(c.pts[i]);
            if (c.pts[i] == c.pts[(i + 1) % c.pts.size()])
                throw std::invalid_argument("zero-length segment" + at_point(c.pts[i]));
        }
    }

    std::vector<Seg> segs;
    for (int ci = 0; ci < int(curves.size()); ++ci) {
        const auto& pts = curves[ci].pts;
        for (int i = 0; i < int(pts.size()); ++i)
            segs.push_back({ci, i, pts[i], pts[(i + 1) % pts.size()], curves[ci].level[i],
                            curves[ci].tag[i]});
    }

    // All pairwise checks: record proper intersections, reject any touching,
    // overlap or degeneracy.
    std::vector<std::vector<Hit>> hits(curves.size());
    std::vector<PlanarCrossing> crossings;
    std::unordered_map<QPt, int, QPtHash> point_count;

    auto segs_adjacent = [&](const Seg& s, const Seg& t) {
        if (s.curve != t.curve) return false;
        int n = int(curves[s.curve].pts.size());
        int d = std::abs(s.idx - t.idx);
        return d == 1 || d == n - 1;
    };

    for (size_t i = 0; i < segs.size(); ++i) {
        const Seg& s = segs[i];
        i64 sxlo = std::min(s.a.x, s.b.x), sxhi = std::max(s.a.x, s.b.x);
        i64 sylo = std::min(s.a.y, s.b.y), syhi = std::max(s.a.y, s.b.y);
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& t = segs[j];
            if (std::max(t.a.x, t.b.x) < sxlo || std::min(t.a.x, t.b.x) > sxhi ||
                std::max(t.a.y, t.b.y) < sylo || std::min(t.a.y, t.b.y) > syhi)
                continue;
            bool collinear = orient(s.a, s.b, t.a) == 0 && orient(s.a, s.b, t.b) == 0;
            if (segs_adjacent(s, t)) {
                if (collinear && dot(s.b - s.a, t.b - t.a) <= 0)
                    throw GeometryError("curve doubles back on itself" + at_point(s.b));
                continue;
            }
            if (collinear) {
                if (on_segment(s.a, s.b, t.a) || on_segment(s.a, s.b, t.b) ||
                    on_segment(t.a, t.b, s.a))
                    throw GeometryError("collinear overlapping segments" + at_point(t.a));
                continue;
            }
            if (properly_intersect(s.a, s.b, t.a, t.b)) {
                bool same = s.level == t.level;
                if (same)
                    throw GeometryError("intersection with equal depth levels" + at_point(s.a));
                const Seg& under = s.level < t.level ? s : t;
                const Seg& over = s.level < t.level ? t : s;
                QPt q = intersection_point(under.a, under.b, over.a, over.b);
                if (++point_count[q] > 1)
                    throw GeometryError("triple point" + at_point(under.a));
                int id = int(crossings.size());
                crossings.push_back({under.curve, under.idx, over.curve, over.idx, under.tag,
                                     over.tag, q.to_double()});
                hits[under.curve].push_back(
                    {under.idx, intersection_param(under.a, under.b, over.a, over.b), id, true,
                     q});
                hits[over.curve].push_back(
                    {over.idx, intersection_param(over.a, over.b, under.a, under.b), id, false,
                     q});
                continue;
            }
            // Non-proper contact between non-adjacent segments is a defect.
            for (Pt p : {t.a, t.b})
                if (on_segment(s.a, s.b, p))
                    throw GeometryError("segment endpoint touches another segment" + at_point(p));
            for (Pt p : {s.a, s.b})
                if (on_segment(t.a, t.b, p))
                    throw GeometryError("segment endpoint touches another segment" + at_point(p));
        }
    }

    // Assemble the diagram: split every curve at its passage points.
    Planarized out;
    LinkDiagram& d = out.diagram;
    d.num_components = int(curves.size());
    d.crossings.resize(crossings.size());
    out.crossings = crossings;
    out.layout.crossing_pos.resize(crossings.size());
    for (size_t c = 0; c < crossings.size(); ++c)
        out.layout.crossing_pos[c] = crossings[c].pos;
    out.vertex_arc.resize(curves.size());

    // Crossing -> the four (arc, end) entries are filled as we walk curves.
    struct Passage {
        int in_arc, out_arc;
    };
    std::vector<Passage> under_passage(crossings.size()), over_passage(crossings.size());

    for (int ci = 0; ci < int(curves.size()); ++ci) {
        const auto& pts = curves[ci].pts;
        auto& hs = hits[ci];
        out.vertex_arc[ci].assign(pts.size(), -1);
        if (hs.empty()) {
            ++d.free_loops;
            std::vector<PtD> poly;
            for (Pt p : pts) poly.push_back(to_double(p));
            out.layout.loop_path[ci] = std::move(poly);
            continue;
        }
        std::sort(hs.begin(), hs.end(), [](const Hit& a, const Hit& b) {
            if (a.seg != b.seg) return a.seg < b.seg;
            return a.t < b.t;
        });
        int np = int(hs.size());
        int base_arc = d.num_arcs;
        d.num_arcs += np;
        d.component_of.resize(size_t(d.num_arcs), ci);

        for (int r = 0; r < np; ++r) {
            const Hit& from = hs[r];
            const Hit& to = hs[(r + 1) % np];
            int arc = base_arc + r;
            std::vector<PtD> path;
            path.push_back(from.point.to_double());
            // Interior polyline vertices strictly between the two passages:
            // from.seg+1 .. to.seg cyclically, or none when the next passage
            // sits further along the same segment.
            int n = int(pts.size());
            int steps;
            if (from.seg == to.seg && r + 1 < np)
                steps = 0;
            else
                steps = ((to.seg - from.seg - 1) % n + n) % n + 1;
            for (int k = 0; k < steps; ++k) {
                int vi = (from.seg + 1 + k) % n;
                path.push_back(to_double(pts[vi]));
                out.vertex_arc[ci][vi] = arc;
            }
            path.push_back(to.point.to_double());
            out.layout.arc_path.push_back(std::move(path));

            Passage& from_p = from.is_under ? under_passage[from.crossing]
                                            : over_passage[from.crossing];
            from_p.out_arc = arc;
            Passage& to_p = to.is_under ? under_passage[to.crossing] : over_passage[to.crossing];
            to_p.in_arc = arc;
        }
    }

    // Fill crossing slots from the passages and the local frame.
    for (size_t c = 0; c < crossings.size(); ++c) {
        const PlanarCrossing& pc = crossings[c];
        const CurveInput& uc = curves[pc.curve_under];
        const CurveInput& oc = curves[pc.curve_over];
        Pt du = uc.pts[(pc.seg_under + 1) % uc.pts.size()] - uc.pts[pc.seg_under];
        Pt dv = oc.pts[(pc.seg_over + 1) % oc.pts.size()] - oc.pts[pc.seg_over];
        Crossing& x = d.crossings[c];
        x.slot[0] = {under_passage[c].in_arc, 1};
        x.slot[2] = {under_passage[c].out_arc, 0};
        // Right-handed crossing exactly when the (over, under) frame is
        // positively rotated; then the over-strand enters at slot 3.
        if (sgn(cross(dv, du)) > 0) {
            x.slot[3] = {over_passage[c].in_arc, 1};
            x.slot[1] = {over_passage[c].out_arc, 0};
        } else {
            x.slot[1] = {over_passage[c].in_arc, 1};
            x.slot[3] = {over_passage[c].out_arc, 0};
        }
    }

    for (const CurveInput& c : curves) d.role_of.push_back(c.role);
    return out;
}

}  // namespace hardlink
