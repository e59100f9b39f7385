#pragma once

#include <optional>
#include <vector>

#include "hardlink/geom.hpp"

namespace hardlink {

// Geometry of the closed braid carrying a twist region: q blocks in a row,
// 2k horizontal lanes, and nested return arcs below. Inside each block the
// bottom k lanes rise under the top k lanes, which descend over them, so
// every crossing is right-handed. Strand copy c occupies lanes c and c+k and
// closes up into one curve per copy that traverses the twist region twice.
struct BraidSpec {
    int q = 3;        // blocks (crossing columns)
    int k = 1;        // strands per group; 2k lanes, k closed copies
    i64 x0 = 0;       // west edge of block 0
    i64 y0 = 0;       // height of lane 0
    i64 lane_h = 8;   // vertical lane spacing (even)
    i64 block_w = 64; // block width (divisible by 2k)
    i64 gap_w = 48;   // gap between consecutive blocks
    i64 margin = 8;   // nesting step for the return arcs

    i64 lane_y(int lane) const { return y0 + lane * lane_h; }
    i64 block_x(int b) const { return x0 + b * (block_w + gap_w); }
    i64 east_edge() const { return block_x(q - 1) + block_w; }
    // x-range of gap g (0 = west of block 0, q = east of the last block).
    i64 gap_xlo(int g) const { return g == 0 ? x0 - margin * (2 * k + 1) : block_x(g - 1) + block_w; }
    i64 gap_xhi(int g) const { return g == q ? east_edge() + margin * (2 * k + 1) : block_x(g); }
    i64 gap_mid(int g) const { return (gap_xlo(g) + gap_xhi(g)) / 2; }
    i64 reach(int lane) const { return margin * (lane + 1); }
    i64 depth(int lane) const { return y0 - reach(lane); }
};

// Where a copy's closed curve is opened for splicing.
struct BraidCut {
    enum Kind { LaneGap, ReturnBottom } kind = LaneGap;
    int gap = 1;     // LaneGap: which inter-block gap
    int lane = 0;    // lane being cut (LaneGap) or whose return arc is cut
    i64 cut_x = 0;   // centre of the removed piece
    i64 half = 8;    // removed piece spans [cut_x - half, cut_x + half]
};

// Depth levels used by braid segments; callers layer their own levels above.
constexpr int kLevelReturnArc = 5;
constexpr int kLevelLaneUnder = 10;
constexpr int kLevelLaneOver = 20;

// Segment provenance kinds (tag & 0xff); the parameter sits in tag >> 8.
enum BraidTag : int {
    kTagLane = 1,
    kTagBlock = 2,
    kTagReturn = 3,
};

struct BraidPath {
    std::vector<Pt> pts;
    std::vector<int> level;
    std::vector<int> tag;
    bool closed = true;
    // For open paths: pts.front() continues the strand in braid flow
    // direction, pts.back() is where the flow arrives. flow_at_start is the
    // unit direction of the first segment under the braid's own circulation.
    Pt flow_at_start{1, 0};
};

// The closed (or cut-open) curve of copy c. tag_param is stored in the upper
// bits of every segment tag.
BraidPath braid_copy_path(const BraidSpec& spec, int copy,
                          const std::optional<BraidCut>& cut, int tag_param = 0);

// A vertical probe just west of block 0 crossing all 2k lanes once; used to
// count how often each strand winds through the twist region.
struct BraidMeridian {
    i64 x;
    i64 ylo, yhi;
};
BraidMeridian braid_meridian(const BraidSpec& spec);

}  // namespace hardlink
