#pragma once

#include <set>
#include <vector>

#include "hardlink/braid.hpp"
#include "hardlink/diagram.hpp"
#include "hardlink/planar.hpp"

namespace testsupport {

// Hand-wired positive Hopf link: two components, two right-handed crossings.
inline hardlink::LinkDiagram positive_hopf() {
    using hardlink::ArcEnd;
    hardlink::LinkDiagram d;
    d.num_arcs = 4;
    d.crossings.resize(2);
    d.crossings[0].slot = {ArcEnd{0, 1}, ArcEnd{3, 0}, ArcEnd{1, 0}, ArcEnd{2, 1}};
    d.crossings[1].slot = {ArcEnd{3, 1}, ArcEnd{0, 0}, ArcEnd{2, 0}, ArcEnd{1, 1}};
    d.num_components = 2;
    d.component_of = {0, 0, 1, 1};
    d.role_of = {hardlink::Role{}, hardlink::Role{}};
    return d;
}

// The 2-lane closed-braid trefoil compiled through the planarizer.
inline hardlink::Planarized planar_trefoil() {
    hardlink::BraidSpec spec;
    spec.q = 3;
    spec.k = 1;
    spec.lane_h = 16;
    spec.block_w = 32;
    spec.gap_w = 16;
    spec.margin = 12;
    hardlink::BraidPath path = hardlink::braid_copy_path(spec, 0, std::nullopt);
    hardlink::CurveInput curve{path.pts, path.level, path.tag, hardlink::Role{}};
    return hardlink::planarize({curve});
}

// Independent Seifert-circle counter: smooth every crossing respecting the
// orientation and count the resulting cycles. Works on any valid diagram.
inline int seifert_circle_count(const hardlink::LinkDiagram& d, const hardlink::Orientation& o) {
    using hardlink::ArcEnd;
    // Darts: arc traversed forward (+) or backward (-) of the reference
    // orientation; component direction picks which one the strand uses.
    // At each crossing, the oriented incoming under dart continues along the
    // oriented outgoing over dart and vice versa.
    int n = d.num_arcs;
    std::vector<int> next(size_t(n), -1);  // oriented arc -> oriented arc
    auto flows_forward = [&](int arc) { return o.dir[d.component_of[arc]] == 1; };
    for (int c = 0; c < int(d.crossings.size()); ++c) {
        const auto& x = d.crossings[c];
        ArcEnd u_head = x.slot[0], u_tail = x.slot[2];
        ArcEnd o_head = d.over_in(c), o_tail = d.over_out(c);
        // Under strand oriented (in, out) pairs, respecting component flips.
        int u_in = flows_forward(u_head.arc) ? u_head.arc : u_tail.arc;
        int u_out = u_in == u_head.arc ? u_tail.arc : u_head.arc;
        int o_in = flows_forward(o_head.arc) ? o_head.arc : o_tail.arc;
        int o_out = o_in == o_head.arc ? o_tail.arc : o_head.arc;
        next[u_in] = o_out;
        next[o_in] = u_out;
    }
    std::vector<char> seen(size_t(n), 0);
    int circles = d.free_loops;
    for (int a0 = 0; a0 < n; ++a0) {
        if (seen[a0]) continue;
        ++circles;
        int a = a0;
        while (!seen[a]) {
            seen[a] = 1;
            a = next[a];
        }
    }
    return circles;
}

}  // namespace testsupport
