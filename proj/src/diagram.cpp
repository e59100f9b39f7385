#include "hardlink/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hardlink {

std::string Role::str() const {
    switch (kind) {
        case RoleKind::Plain: return "plain";
        case RoleKind::VariableDisc: return "variable-disc";
        case RoleKind::ExtraDisc: return "extra-disc";
        case RoleKind::SentenceStrand: return "sentence-strand(" + std::to_string(index) + ")";
        case RoleKind::VertexTrefoil: return "vertex-trefoil(" + std::to_string(index) + ")";
        case RoleKind::EdgeLoop: return "edge-loop(" + std::to_string(index) + ")";
    }
    return "plain";
}

Role Role::parse(const std::string& s) {
    if (s == "plain") return {};
    if (s == "variable-disc") return {RoleKind::VariableDisc, -1};
    if (s == "extra-disc") return {RoleKind::ExtraDisc, -1};
    auto paren = s.find('(');
    if (paren != std::string::npos && s.back() == ')') {
        std::string base = s.substr(0, paren);
        int idx = std::stoi(s.substr(paren + 1, s.size() - paren - 2));
        if (base == "sentence-strand") return {RoleKind::SentenceStrand, idx};
        if (base == "vertex-trefoil") return {RoleKind::VertexTrefoil, idx};
        if (base == "edge-loop") return {RoleKind::EdgeLoop, idx};
    }
    throw std::invalid_argument("unknown role tag: " + s);
}

namespace {

// Tail of the arc reached by continuing the strand through crossing c from
// the slot holding an incoming head.
int continue_strand(const LinkDiagram& d, int c, int slot_in) {
    const ArcEnd& out = d.crossings[c].slot[slot_in ^ 2];
    return out.arc;
}

// For each arc head, the (crossing, slot) where it sits. -1 when absent.
struct SlotIndex {
    std::vector<int> head_crossing, head_slot, tail_crossing, tail_slot;

    explicit SlotIndex(const LinkDiagram& d)
        : head_crossing(size_t(d.num_arcs), -1),
          head_slot(size_t(d.num_arcs), -1),
          tail_crossing(size_t(d.num_arcs), -1),
          tail_slot(size_t(d.num_arcs), -1) {
        for (int c = 0; c < int(d.crossings.size()); ++c) {
            for (int s = 0; s < 4; ++s) {
                const ArcEnd& e = d.crossings[c].slot[s];
                if (e.arc < 0 || e.arc >= d.num_arcs) continue;
                if (e.end == 1) {
                    head_crossing[e.arc] = c;
                    head_slot[e.arc] = s;
                } else {
                    tail_crossing[e.arc] = c;
                    tail_slot[e.arc] = s;
                }
            }
        }
    }
};

std::vector<std::vector<int>> trace_cycles(const LinkDiagram& d, const SlotIndex& idx) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(size_t(d.num_arcs), 0);
    for (int a0 = 0; a0 < d.num_arcs; ++a0) {
        if (seen[a0]) continue;
        std::vector<int> cyc;
        int a = a0;
        while (!seen[a]) {
            seen[a] = 1;
            cyc.push_back(a);
            int c = idx.head_crossing[a];
            int s = idx.head_slot[a];
            if (c < 0) throw std::invalid_argument("arc head not attached to a crossing");
            a = continue_strand(d, c, s);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

}  // namespace

ValidationReport validate(const LinkDiagram& d) {
    ValidationReport rep;

    // Slot references: every arc-end in exactly one slot.
    std::vector<int> end_count(size_t(d.num_arcs) * 2, 0);
    for (int c = 0; c < int(d.crossings.size()); ++c) {
        for (int s = 0; s < 4; ++s) {
            const ArcEnd& e = d.crossings[c].slot[s];
            if (e.arc < 0 || e.arc >= d.num_arcs || (e.end != 0 && e.end != 1)) {
                rep.fail("slot-refs", "crossing " + std::to_string(c) + " slot " +
                                          std::to_string(s) + " references invalid arc-end");
                return rep;
            }
            int& cnt = end_count[size_t(e.arc) * 2 + e.end];
            if (++cnt > 1) {
                rep.fail("slot-refs", "duplicate slot reference: arc " + std::to_string(e.arc) +
                                          " end " + std::to_string(e.end) + " at crossing " +
                                          std::to_string(c));
                return rep;
            }
        }
    }
    for (int a = 0; a < d.num_arcs; ++a) {
        if (end_count[size_t(a) * 2] != 1 || end_count[size_t(a) * 2 + 1] != 1) {
            rep.fail("slot-refs", "arc " + std::to_string(a) + " does not occur once per end");
            return rep;
        }
    }

    // Under/over end pattern per crossing.
    for (int c = 0; c < int(d.crossings.size()); ++c) {
        const Crossing& x = d.crossings[c];
        if (x.slot[0].end != 1 || x.slot[2].end != 0 || x.slot[1].end + x.slot[3].end != 1) {
            rep.fail("slot-ends", "crossing " + std::to_string(c) +
                                      " violates the incoming-under slot convention");
            return rep;
        }
    }

    // Strand continuation cycles must match component_of.
    SlotIndex idx(d);
    std::vector<std::vector<int>> cycles;
    try {
        cycles = trace_cycles(d, idx);
    } catch (const std::exception& e) {
        rep.fail("strands", e.what());
        return rep;
    }
    if (int(d.component_of.size()) != d.num_arcs) {
        rep.fail("components", "component_of size mismatch");
        return rep;
    }
    std::set<int> used_comps;
    for (const auto& cyc : cycles) {
        int comp = d.component_of[cyc[0]];
        for (int a : cyc) {
            if (d.component_of[a] != comp) {
                rep.fail("components", "arc " + std::to_string(a) +
                                           " component tag disagrees with strand tracing");
                return rep;
            }
        }
        if (!used_comps.insert(comp).second) {
            rep.fail("components",
                     "two strand cycles share component id " + std::to_string(comp));
            return rep;
        }
    }
    if (int(cycles.size()) + d.free_loops != d.num_components)
        rep.fail("components", "cycle count plus free loops does not equal num_components");
    if (int(d.role_of.size()) != d.num_components)
        rep.fail("components", "role_of size mismatch");

    // Face census per connected piece: F = V + 2 on each piece.
    if (rep.ok && !d.crossings.empty()) {
        int nc = int(d.crossings.size());
        std::vector<int> piece(size_t(nc), -1);
        int pieces = 0;
        for (int c0 = 0; c0 < nc; ++c0) {
            if (piece[c0] >= 0) continue;
            std::vector<int> stack{c0};
            piece[c0] = pieces;
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                for (int s = 0; s < 4; ++s) {
                    int a = d.crossings[c].slot[s].arc;
                    for (int c2 : {idx.head_crossing[a], idx.tail_crossing[a]}) {
                        if (piece[c2] < 0) {
                            piece[c2] = pieces;
                            stack.push_back(c2);
                        }
                    }
                }
            }
            ++pieces;
        }
        std::vector<int> piece_v(size_t(pieces), 0), piece_f(size_t(pieces), 0);
        for (int c = 0; c < nc; ++c) ++piece_v[piece[c]];

        // Faces are orbits of: arrive along a dart, leave along the next slot
        // counterclockwise.
        std::vector<char> dart_seen(size_t(d.num_arcs) * 2, 0);
        for (int a0 = 0; a0 < d.num_arcs; ++a0) {
            for (int dir0 = 0; dir0 < 2; ++dir0) {
                if (dart_seen[size_t(a0) * 2 + dir0]) continue;
                int a = a0, dir = dir0;
                int face_piece = -1;
                while (!dart_seen[size_t(a) * 2 + dir]) {
                    dart_seen[size_t(a) * 2 + dir] = 1;
                    int c = dir == 1 ? idx.head_crossing[a] : idx.tail_crossing[a];
                    int s = dir == 1 ? idx.head_slot[a] : idx.tail_slot[a];
                    face_piece = piece[c];
                    const ArcEnd& next = d.crossings[c].slot[(s + 1) % 4];
                    a = next.arc;
                    dir = next.end == 0 ? 1 : 0;
                }
                ++piece_f[face_piece];
                ++rep.total_faces;
            }
        }
        for (int p = 0; p < pieces; ++p) {
            rep.piece_faces.push_back({piece_v[p], piece_f[p]});
            if (piece_f[p] != piece_v[p] + 2)
                rep.fail("faces", "piece " + std::to_string(p) + " has " +
                                      std::to_string(piece_v[p]) + " crossings but " +
                                      std::to_string(piece_f[p]) + " faces");
        }
    }

    return rep;
}

std::vector<std::vector<int>> components(const LinkDiagram& d) {
    ValidationReport rep = validate(d);
    if (!rep.ok)
        throw std::invalid_argument("invalid diagram: " + rep.issues.front().check + ": " +
                                    rep.issues.front().detail);
    SlotIndex idx(d);
    std::vector<std::vector<int>> by_comp(size_t(d.num_components));
    for (auto& cyc : trace_cycles(d, idx)) by_comp[size_t(d.component_of[cyc[0]])] = cyc;
    return by_comp;
}

std::vector<int> signed_crossings(const LinkDiagram& d, const Orientation& o) {
    if (int(o.dir.size()) != d.num_components)
        throw std::invalid_argument("orientation does not cover every component");
    for (int v : o.dir)
        if (v != 1 && v != -1) throw std::invalid_argument("orientation entries must be +-1");
    std::vector<int> signs(d.crossings.size());
    for (int c = 0; c < int(d.crossings.size()); ++c) {
        int uc = d.component_of[d.under_in(c).arc];
        int oc = d.component_of[d.over_in(c).arc];
        signs[c] = d.ref_sign(c) * o.dir[uc] * o.dir[oc];
    }
    return signs;
}

LinkingMatrix linking_matrix(const LinkDiagram& d, const Orientation& o) {
    std::vector<int> signs = signed_crossings(d, o);
    LinkingMatrix m;
    m.n = d.num_components;
    m.entries.assign(size_t(m.n) * m.n, 0);
    for (int c = 0; c < int(d.crossings.size()); ++c) {
        int uc = d.component_of[d.under_in(c).arc];
        int oc = d.component_of[d.over_in(c).arc];
        if (uc == oc) continue;
        m.at(uc, oc) += signs[c];
        m.at(oc, uc) += signs[c];
    }
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (m.at(i, j) % 2 != 0)
                throw std::invalid_argument("odd crossing sign sum between components");
            m.at(i, j) /= 2;
        }
    return m;
}

LinkDiagram torus_knot_diagram(int q) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("torus_knot_diagram requires odd q >= 3");
    // Arcs: left lane pieces L_k = k, right lane pieces R_k = q + k, between
    // crossings k and k+1. All crossings right-handed.
    LinkDiagram d;
    d.num_arcs = 2 * q;
    d.crossings.resize(size_t(q));
    for (int k = 0; k < q; ++k) {
        int prev = (k + q - 1) % q;
        d.crossings[k].slot[0] = {q + prev, 1};
        d.crossings[k].slot[1] = {q + k, 0};
        d.crossings[k].slot[2] = {k, 0};
        d.crossings[k].slot[3] = {prev, 1};
    }
    d.num_components = 1;
    d.component_of.assign(size_t(d.num_arcs), 0);
    d.role_of = {Role{}};
    return d;
}

LinkDiagram cable4(const LinkDiagram& knot) {
    if (knot.num_components != 1)
        throw std::invalid_argument("cable4 expects a knot diagram (one component)");

    LinkDiagram d;
    if (knot.crossings.empty()) {
        // A crossingless unknot cables to four disjoint circles.
        d.free_loops = 4;
        d.num_components = 4;
        d.role_of.assign(4, Role{});
        return d;
    }

    int A = knot.num_arcs;
    int nc = int(knot.crossings.size());
    // Copy arcs 4a+i; per original crossing, 12 vertical + 12 horizontal
    // internal arcs laid out as a 4x4 grid.
    d.num_arcs = 4 * A + 24 * nc;
    d.crossings.resize(size_t(16) * nc);

    auto vert = [&](int c, int x, int y) { return 4 * A + 24 * c + (y - 1) * 4 + x; };
    auto horiz = [&](int c, int x, int y) { return 4 * A + 24 * c + 12 + (x - 1) * 4 + y; };

    for (int c = 0; c < nc; ++c) {
        int a = knot.under_in(c).arc;
        int cc = knot.under_out(c).arc;
        int oin = knot.over_in(c).arc;
        int oout = knot.over_out(c).arc;
        bool positive = knot.ref_sign(c) == 1;
        for (int x = 0; x < 4; ++x) {
            for (int y = 0; y < 4; ++y) {
                Crossing& g = d.crossings[size_t(16) * c + 4 * y + x];
                g.slot[0] = y == 0 ? ArcEnd{4 * a + x, 1} : ArcEnd{vert(c, x, y), 1};
                g.slot[2] = y == 3 ? ArcEnd{4 * cc + x, 0} : ArcEnd{vert(c, x, y + 1), 0};
                if (positive) {
                    // Over-strand heads east: incoming copies stack top-down.
                    g.slot[3] = x == 0 ? ArcEnd{4 * oin + (3 - y), 1} : ArcEnd{horiz(c, x, y), 1};
                    g.slot[1] =
                        x == 3 ? ArcEnd{4 * oout + (3 - y), 0} : ArcEnd{horiz(c, x + 1, y), 0};
                } else {
                    // Over-strand heads west.
                    g.slot[1] = x == 3 ? ArcEnd{4 * oin + y, 1} : ArcEnd{horiz(c, x + 1, y), 1};
                    g.slot[3] = x == 0 ? ArcEnd{4 * oout + y, 0} : ArcEnd{horiz(c, x, y), 0};
                }
            }
        }
    }

    // Components: copy i of the pattern carries every arc 4a+i.
    d.num_components = 4;
    d.component_of.assign(size_t(d.num_arcs), -1);
    for (int a = 0; a < A; ++a)
        for (int i = 0; i < 4; ++i) d.component_of[size_t(4) * a + i] = i;
    // Internal arcs inherit the component of the strand they subdivide.
    for (int c = 0; c < nc; ++c) {
        int a = knot.under_in(c).arc;
        int oin = knot.over_in(c).arc;
        bool positive = knot.ref_sign(c) == 1;
        for (int x = 0; x < 4; ++x)
            for (int y = 1; y <= 3; ++y)
                d.component_of[vert(c, x, y)] = d.component_of[size_t(4) * a + x];
        for (int y = 0; y < 4; ++y) {
            int copy = positive ? 3 - y : y;
            for (int x = 1; x <= 3; ++x)
                d.component_of[horiz(c, x, y)] = d.component_of[size_t(4) * oin + copy];
        }
    }
    d.role_of.assign(4, Role{});
    return d;
}

}  // namespace hardlink
