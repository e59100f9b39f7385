#include "hardlink/braid.hpp"

#include <stdexcept>

namespace hardlink {

namespace {

struct Walk {
    std::vector<Pt> pts;
    std::vector<int> level;
    std::vector<int> tag;

    void start(Pt p) { pts.push_back(p); }

    // Segment from the last point to p.
    void add(Pt p, int lvl, int tg) {
        level.push_back(lvl);
        tag.push_back(tg);
        pts.push_back(p);
    }

    // Metadata of the closing segment back to pts.front().
    void close(int lvl, int tg) {
        level.push_back(lvl);
        tag.push_back(tg);
    }
};

}  // namespace

BraidPath braid_copy_path(const BraidSpec& spec, int copy, const std::optional<BraidCut>& cut,
                          int tag_param) {
    if (spec.q < 1 || spec.q % 2 == 0) throw std::invalid_argument("braid needs odd q");
    if (copy < 0 || copy >= spec.k) throw std::invalid_argument("bad copy index");
    if (spec.block_w % (2 * spec.k) != 0 || spec.lane_h % 2 != 0)
        throw std::invalid_argument("block width must divide into 2k lanes of even height");

    auto lane_tag = [&](int kind) { return kind | (tag_param << 8); };

    Walk w;
    int cut_segment = -1;

    int lane = copy;
    w.start({spec.x0 - spec.reach(lane), spec.lane_y(lane)});
    for (int traversal = 0; traversal < 2; ++traversal) {
        // Gap 0 piece into block 0.
        if (cut && cut->kind == BraidCut::LaneGap && cut->gap == 0 && cut->lane == lane)
            cut_segment = int(w.level.size());
        w.add({spec.x0, spec.lane_y(lane)}, kLevelLaneUnder, lane_tag(kTagLane));

        for (int b = 0; b < spec.q; ++b) {
            int next = lane < spec.k ? lane + spec.k : lane - spec.k;
            int lvl = lane < spec.k ? kLevelLaneUnder : kLevelLaneOver;
            w.add({spec.block_x(b) + spec.block_w, spec.lane_y(next)}, lvl, lane_tag(kTagBlock));
            lane = next;
            int g = b + 1;
            i64 xhi = g == spec.q ? spec.east_edge() + spec.reach(lane) : spec.block_x(g);
            if (cut && cut->kind == BraidCut::LaneGap && cut->gap == g && cut->lane == lane)
                cut_segment = int(w.level.size());
            w.add({xhi, spec.lane_y(lane)}, kLevelLaneUnder, lane_tag(kTagLane));
        }

        // Return arc: down the east side, west along the bottom, up the west side.
        w.add({spec.east_edge() + spec.reach(lane), spec.depth(lane)}, kLevelReturnArc,
              lane_tag(kTagReturn));
        if (cut && cut->kind == BraidCut::ReturnBottom && cut->lane == lane)
            cut_segment = int(w.level.size());
        w.add({spec.x0 - spec.reach(lane), spec.depth(lane)}, kLevelReturnArc,
              lane_tag(kTagReturn));
        if (traversal == 0) {
            w.add({spec.x0 - spec.reach(lane), spec.lane_y(lane)}, kLevelReturnArc,
                  lane_tag(kTagReturn));
        } else {
            w.close(kLevelReturnArc, lane_tag(kTagReturn));
        }
    }
    if (lane != copy) throw std::logic_error("braid walk did not close up");

    BraidPath out;
    if (!cut) {
        out.pts = std::move(w.pts);
        out.level = std::move(w.level);
        out.tag = std::move(w.tag);
        out.closed = true;
        return out;
    }
    if (cut_segment < 0) throw std::invalid_argument("cut location not visited by this copy");

    // Open the walk at the cut: emit from the far cut end around to the near
    // one, following the braid flow.
    int n = int(w.pts.size());
    Pt a = w.pts[cut_segment];
    Pt b = w.pts[(cut_segment + 1) % n];
    if (a.y != b.y) throw std::logic_error("cut segment is not horizontal");
    Pt start, finish;
    if (cut->kind == BraidCut::LaneGap) {
        // Lane pieces flow east.
        start = {cut->cut_x + cut->half, a.y};
        finish = {cut->cut_x - cut->half, a.y};
        out.flow_at_start = {1, 0};
    } else {
        // Return bottoms flow west.
        start = {cut->cut_x - cut->half, a.y};
        finish = {cut->cut_x + cut->half, a.y};
        out.flow_at_start = {-1, 0};
    }
    out.closed = false;
    out.pts.push_back(start);
    out.level.push_back(w.level[cut_segment]);
    out.tag.push_back(w.tag[cut_segment]);
    for (int i = 1; i <= n; ++i) {
        int idx = (cut_segment + i) % n;
        out.pts.push_back(w.pts[idx]);
        if (i < n) {
            out.level.push_back(w.level[idx]);
            out.tag.push_back(w.tag[idx]);
        }
    }
    // Final piece of the split segment, back at the cut.
    out.level.push_back(w.level[cut_segment]);
    out.tag.push_back(w.tag[cut_segment]);
    out.pts.push_back(finish);
    return out;
}

BraidMeridian braid_meridian(const BraidSpec& spec) {
    return {spec.x0 - spec.margin / 2, spec.y0 - spec.lane_h / 2,
            spec.y0 + (2 * spec.k - 1) * spec.lane_h + spec.lane_h / 2};
}

}  // namespace hardlink
