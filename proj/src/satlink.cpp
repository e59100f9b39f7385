#include "hardlink/satlink.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace hardlink {

// ---- instance text format ----

namespace {

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& t, const char* what) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + t + "'");
    }
    if (used != t.size())
        throw ParseError(std::string("expected integer for ") + what + ", got '" + t + "'");
    return v;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) throw ParseError("malformed header: empty input");
    auto head = tokens_of(lines[0]);
    if (head.size() != 4 || head[0] != "p" || head[1] != "i3sat")
        throw ParseError("malformed header: expected 'p i3sat <n> <m>'");
    Instance ins;
    ins.n = parse_int(head[2], "variable count");
    int m = parse_int(head[3], "sentence count");
    if (ins.n < 1 || m < 1) throw ParseError("malformed header: n and m must be at least 1");
    if (int(lines.size()) != 1 + m)
        throw ParseError("expected " + std::to_string(m) + " sentence lines, found " +
                         std::to_string(lines.size() - 1));
    for (int j = 0; j < m; ++j) {
        auto toks = tokens_of(lines[1 + j]);
        if (toks.size() != 3)
            throw ParseError("wrong literal count in sentence " + std::to_string(j + 1) +
                             ": expected 3, got " + std::to_string(toks.size()));
        std::array<Literal, 3> sent;
        for (int k = 0; k < 3; ++k) {
            int v = parse_int(toks[k], "literal");
            if (v == 0 || std::abs(v) > ins.n)
                throw ParseError("variable index out of range in sentence " +
                                 std::to_string(j + 1) + ": " + toks[k]);
            sent[k] = {std::abs(v), v < 0};
        }
        ins.sentences.push_back(sent);
    }
    return ins;
}

std::string format_instance(const Instance& ins) {
    std::ostringstream os;
    os << "p i3sat " << ins.n << " " << ins.m() << "\n";
    for (const auto& s : ins.sentences) {
        for (int k = 0; k < 3; ++k)
            os << (k ? " " : "") << (s[k].negated ? -s[k].var : s[k].var);
        os << "\n";
    }
    return os.str();
}

bool satisfies(const Instance& ins, const Assignment& a) {
    if (int(a.size()) != ins.n) throw std::invalid_argument("assignment length mismatch");
    for (const auto& s : ins.sentences) {
        int truths = 0;
        for (const Literal& lit : s) truths += (a[lit.var - 1] != 0) != lit.negated ? 1 : 0;
        if (truths != 1) return false;
    }
    return true;
}

std::vector<Assignment> solve_bruteforce(const Instance& ins) {
    if (ins.n > 24) throw std::invalid_argument("solve_bruteforce guarded to n <= 24");
    std::vector<Assignment> out;
    for (unsigned mask = 0; mask < (1u << ins.n); ++mask) {
        Assignment a(size_t(ins.n));
        for (int i = 0; i < ins.n; ++i) a[i] = (mask >> i) & 1u;
        if (satisfies(ins, a)) out.push_back(a);
    }
    return out;
}

// ---- link construction ----

namespace {

// Row heights of the bipartite layout. The gadget braids sit at y in
// [-64, 60], bands fan out between the rows.
constexpr i64 kDiscRowY = 1000;
constexpr i64 kDiscHalfH = 80;
constexpr i64 kBandTopY = 800;
constexpr i64 kBandBotY = 200;
constexpr i64 kTwistHiY = 880;
constexpr i64 kTwistLoY = 840;
constexpr i64 kExtraRowY = -600;
constexpr i64 kExtraBandLoY = -460;
constexpr i64 kExtraBandHiY = -200;
constexpr int kDiscLevel = 200;

struct Band {
    int sentence = 0;
    int slot = 0;  // 0..2 literal position, 3 = extra
    int var = -1;  // 0-based, -1 for the extra band
    bool negated = false;
    int id = 0;
    i64 cut_x = 0;
    i64 port_l = 0, port_r = 0;
    int level = 0;
};

struct CurveBuilder {
    CurveInput c;

    void start(Pt p) { c.pts.push_back(p); }

    void seg_to(Pt p, int level, int tag) {
        c.level.push_back(level);
        c.tag.push_back(tag);
        c.pts.push_back(p);
    }

    void close(int level, int tag) {
        c.level.push_back(level);
        c.tag.push_back(tag);
    }

    int last_index() const { return int(c.pts.size()) - 1; }
};

// Octagon with a flat horizontal edge carrying the band ports.
std::vector<Pt> octagon(i64 cx, i64 cy, i64 w, i64 h) {
    return {{cx - w + 32, cy + h}, {cx + w - 32, cy + h}, {cx + w, cy + h - 32},
            {cx + w, cy - h + 32}, {cx + w - 32, cy - h}, {cx - w + 32, cy - h},
            {cx - w, cy - h + 32}, {cx - w, cy + h - 32}};
}

struct ProbeRecord {
    int vertex = -1;
    Pt point;
    Pt flow;
};

// Emits one finger: down from the disc edge, through the gadget cable, and
// back. Returns the probe at the splice into the cable.
ProbeRecord splice_finger(CurveBuilder& b, const Band& band, const BraidPath& cable,
                          i64 lane_y, bool downward) {
    int tag = kSatTagBand | (band.id << 8);
    int lvl = band.level;
    i64 pl = band.port_l, pr = band.port_r;
    i64 txw = band.cut_x - 8, txe = band.cut_x + 8;
    ProbeRecord probe;

    if (downward) {
        // Variable band: the disc edge is walked east to west, so the finger
        // leaves at the right port and returns at the left one.
        i64 ey = kDiscRowY - kDiscHalfH;
        if (!band.negated) {
            b.seg_to({pr, kBandTopY}, lvl, tag);
            b.seg_to({txe, kBandBotY}, lvl, tag);
            b.seg_to({txe, lane_y}, lvl, tag);
        } else {
            // Half-twist: the two strands cross once next to the disc.
            b.seg_to({pr, kTwistHiY}, lvl, tag);
            b.seg_to({pl, kTwistLoY}, lvl + 1, tag);
            b.seg_to({pl, kBandTopY}, lvl, tag);
            b.seg_to({txw, kBandBotY}, lvl, tag);
            b.seg_to({txw, lane_y}, lvl, tag);
        }
        probe.vertex = b.last_index();
        probe.point = b.c.pts.back();
        probe.flow = cable.flow_at_start;
        if (!band.negated) {
            for (size_t i = 1; i < cable.pts.size(); ++i)
                b.seg_to(cable.pts[i], cable.level[i - 1], cable.tag[i - 1]);
            b.seg_to({txw, kBandBotY}, lvl, tag);
            b.seg_to({pl, kBandTopY}, lvl, tag);
            b.seg_to({pl, ey}, lvl, tag);
        } else {
            for (int i = int(cable.pts.size()) - 2; i >= 0; --i)
                b.seg_to(cable.pts[i], cable.level[i], cable.tag[i]);
            b.seg_to({txe, kBandBotY}, lvl, tag);
            b.seg_to({pr, kBandTopY}, lvl, tag);
            b.seg_to({pr, kTwistLoY}, lvl, tag);
            b.seg_to({pl, kTwistHiY}, lvl, tag);
            b.seg_to({pl, ey}, lvl, tag);
        }
    } else {
        // Extra band: the disc edge is walked west to east and the finger
        // rises to the gadget's outermost return arc.
        i64 ey = kExtraRowY + kDiscHalfH;
        b.seg_to({pl, kExtraBandLoY}, lvl, tag);
        b.seg_to({txw, kExtraBandHiY}, lvl, tag);
        b.seg_to(cable.pts.front(), lvl, tag);
        probe.vertex = b.last_index();
        probe.point = b.c.pts.back();
        probe.flow = cable.flow_at_start;
        for (size_t i = 1; i < cable.pts.size(); ++i)
            b.seg_to(cable.pts[i], cable.level[i - 1], cable.tag[i - 1]);
        b.seg_to({txe, kExtraBandHiY}, lvl, tag);
        b.seg_to({pr, kExtraBandLoY}, lvl, tag);
        b.seg_to({pr, ey}, lvl, tag);
    }
    return probe;
}

void check_instance(const Instance& ins) {
    if (ins.n < 1 || ins.m() < 1)
        throw std::invalid_argument("instance needs at least one variable and one sentence");
    for (const auto& s : ins.sentences)
        for (const Literal& lit : s)
            if (lit.var < 1 || lit.var > ins.n)
                throw std::invalid_argument("literal variable out of range");
}

}  // namespace

i64 sat_crossing_bound(int n, int m) {
    (void)n;  // the routing never depends on the variable count
    return 50ll * m * m + 57ll * m;
}

SatLink build_link(const Instance& ins) {
    check_instance(ins);
    const int n = ins.n, m = ins.m();
    const int q = 2 * m + 3;

    BraidSpec proto;
    proto.k = 4;
    proto.q = q;
    proto.lane_h = 8;
    proto.block_w = 64;
    proto.gap_w = 48;
    proto.margin = 8;
    const i64 braid_width = proto.east_edge() - proto.x0;
    const i64 gadget_pitch = braid_width + 2 * proto.reach(7) + 160;

    std::vector<BraidSpec> spec(size_t(m), proto);
    for (int j = 0; j < m; ++j) spec[j].x0 = j * gadget_pitch;

    // Bands: one per literal occurrence plus one per sentence from the extra
    // disc. Literal position l opens satellite copy l via lane 4+l at gap
    // 1+l; the extra band opens copy 3 at its outermost return arc.
    std::vector<Band> bands;
    std::vector<int> occ(size_t(n), 0);
    for (int j = 0; j < m; ++j) {
        for (int l = 0; l < 3; ++l) {
            const Literal& lit = ins.sentences[j][l];
            Band b;
            b.sentence = j;
            b.slot = l;
            b.var = lit.var - 1;
            b.negated = lit.negated;
            b.cut_x = spec[j].gap_mid(1 + l);
            bands.push_back(b);
            ++occ[b.var];
        }
        Band e;
        e.sentence = j;
        e.slot = 3;
        e.cut_x = (spec[j].x0 + spec[j].east_edge()) / 2;
        bands.push_back(e);
    }

    // Depth levels: the band of the lexicographically smaller
    // (variable, sentence) pair passes over where diagonals cross.
    {
        std::vector<Band*> by_rank;
        for (Band& b : bands)
            if (b.slot < 3) by_rank.push_back(&b);
        std::sort(by_rank.begin(), by_rank.end(), [](const Band* a, const Band* b) {
            return std::tie(a->var, a->sentence, a->slot) < std::tie(b->var, b->sentence, b->slot);
        });
        int nb = int(by_rank.size());
        for (int r = 0; r < nb; ++r) by_rank[r]->level = 1000 + 2 * (nb - r);
        int eb = 0;
        for (Band& b : bands)
            if (b.slot == 3) b.level = 900 + eb++;
        for (int i = 0; i < int(bands.size()); ++i) bands[i].id = i;
    }

    // Disc geometry and ports, fingers ordered by target so the verticals
    // under each disc stay parallel.
    std::vector<i64> half_w(static_cast<size_t>(n));
    i64 wmax = 80;
    for (int v = 0; v < n; ++v) {
        half_w[v] = std::max<i64>(80, 24 * occ[v] + 48);
        wmax = std::max(wmax, half_w[v]);
    }
    const i64 disc_pitch = 2 * wmax + 128;
    std::vector<i64> disc_cx(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) disc_cx[v] = wmax + v * disc_pitch;
    const i64 extra_w = std::max<i64>(80, 24 * m + 48);
    const i64 extra_cx = (spec[0].x0 + spec[m - 1].east_edge()) / 2;

    std::vector<std::vector<Band*>> fingers_of(static_cast<size_t>(n));
    std::vector<Band*> extra_fingers;
    for (Band& b : bands)
        (b.slot < 3 ? fingers_of[b.var] : extra_fingers).push_back(&b);
    auto by_target = [](const Band* a, const Band* b) {
        return std::tie(a->cut_x, a->sentence, a->slot) < std::tie(b->cut_x, b->sentence, b->slot);
    };
    for (int v = 0; v < n; ++v) {
        auto& f = fingers_of[v];
        std::sort(f.begin(), f.end(), by_target);
        i64 span = 48 * i64(f.size()) - 32;
        for (int k = 0; k < int(f.size()); ++k) {
            f[k]->port_l = disc_cx[v] - span / 2 + 48 * k;
            f[k]->port_r = f[k]->port_l + 16;
        }
    }
    std::sort(extra_fingers.begin(), extra_fingers.end(), by_target);
    {
        i64 span = 48 * i64(extra_fingers.size()) - 32;
        for (int k = 0; k < int(extra_fingers.size()); ++k) {
            extra_fingers[k]->port_l = extra_cx - span / 2 + 48 * k;
            extra_fingers[k]->port_r = extra_fingers[k]->port_l + 16;
        }
    }

    // Deterministic de-concurrency pass: no three band diagonals through one
    // point.
    for (int pass = 0; pass < 200; ++pass) {
        struct Diag {
            Pt a, b;
            Band* band;
        };
        std::vector<Diag> diags;
        for (Band& b : bands) {
            if (b.slot == 3) continue;
            diags.push_back({{b.port_l, kBandTopY}, {b.cut_x - 8, kBandBotY}, &b});
            diags.push_back({{b.port_r, kBandTopY}, {b.cut_x + 8, kBandBotY}, &b});
        }
        std::unordered_map<QPt, Band*, QPtHash> seen;
        Band* bump = nullptr;
        for (size_t i = 0; i < diags.size() && !bump; ++i)
            for (size_t j = i + 1; j < diags.size() && !bump; ++j) {
                if (!properly_intersect(diags[i].a, diags[i].b, diags[j].a, diags[j].b)) continue;
                QPt p = intersection_point(diags[i].a, diags[i].b, diags[j].a, diags[j].b);
                auto [it, fresh] = seen.insert({p, diags[j].band});
                if (!fresh) bump = diags[j].band;
            }
        if (!bump) break;
        bump->port_l += 2;
        bump->port_r += 2;
        if (pass == 199) throw GeometryError("band diagonals could not be de-concurred");
    }

    // Assemble one closed curve per link component.
    SatLink sl;
    sl.n = n;
    sl.m = m;
    sl.companion_q = q;
    sl.gadget.sentences.resize(size_t(m));
    for (int j = 0; j < m; ++j) {
        sl.gadget.sentences[j].q = q;
        sl.gadget.sentences[j].meridian = braid_meridian(spec[j]);
    }

    std::vector<CurveInput> curves;
    auto splice_all = [&](CurveBuilder& b, std::vector<Band*> fingers, bool downward) {
        if (downward)  // bottom edge is walked east to west
            std::reverse(fingers.begin(), fingers.end());
        for (Band* band : fingers) {
            int copy = band->slot < 3 ? band->slot : 3;
            BraidCut cut;
            if (band->slot < 3) {
                cut.kind = BraidCut::LaneGap;
                cut.gap = 1 + band->slot;
                cut.lane = 4 + band->slot;
            } else {
                cut.kind = BraidCut::ReturnBottom;
                cut.lane = 7;
            }
            cut.cut_x = band->cut_x;
            cut.half = 8;
            BraidPath cable = braid_copy_path(spec[band->sentence], copy, cut, band->sentence);
            i64 lane_y = spec[band->sentence].lane_y(cut.lane);
            i64 ey = downward ? kDiscRowY - kDiscHalfH : kExtraRowY + kDiscHalfH;
            b.seg_to({downward ? band->port_r : band->port_l, ey}, kDiscLevel, kSatTagDisc);
            ProbeRecord probe = splice_finger(b, *band, cable, lane_y, downward);
            SlotDescriptor& sd = sl.gadget.sentences[band->sentence].slots[band->slot];
            sd.source_component = int(curves.size());
            sd.twist = band->negated ? -1 : 1;
            sd.cable_copy = copy;
            sd.probe_curve = int(curves.size());
            sd.probe_vertex = probe.vertex;
            sd.probe_point = probe.point;
            sd.probe_flow = probe.flow;
        }
    };

    for (int v = 0; v < n; ++v) {
        CurveBuilder b;
        b.c.role = {RoleKind::VariableDisc, v + 1};
        auto oct = octagon(disc_cx[v], kDiscRowY, half_w[v], kDiscHalfH);
        b.start(oct[0]);
        for (int k = 1; k <= 4; ++k) b.seg_to(oct[k], kDiscLevel, kSatTagDisc);
        splice_all(b, fingers_of[v], true);
        for (int k = 5; k < 8; ++k) b.seg_to(oct[k], kDiscLevel, kSatTagDisc);
        b.close(kDiscLevel, kSatTagDisc);
        curves.push_back(std::move(b.c));
    }
    {
        CurveBuilder b;
        b.c.role = {RoleKind::ExtraDisc, -1};
        auto oct = octagon(extra_cx, kExtraRowY, extra_w, kDiscHalfH);
        b.start(oct[0]);
        splice_all(b, extra_fingers, false);
        for (int k = 1; k < 8; ++k) b.seg_to(oct[k], kDiscLevel, kSatTagDisc);
        b.close(kDiscLevel, kSatTagDisc);
        curves.push_back(std::move(b.c));
    }

    Planarized p = planarize(curves);
    sl.diagram = std::move(p.diagram);
    sl.layout = std::move(p.layout);
    sl.layout.stroke = 2.0;
    sl.layout.under_gap = 5.0;
    sl.crossing_info = std::move(p.crossings);
    sl.vertex_arc = std::move(p.vertex_arc);
    sl.instance = ins;
    return sl;
}

// ---- orientation semantics ----

namespace {

void check_orientation(const SatLink& sl, const Orientation& o) {
    if (int(o.dir.size()) != sl.n + 1)
        throw std::invalid_argument("orientation must cover all n+1 components");
    for (int v : o.dir)
        if (v != 1 && v != -1) throw std::invalid_argument("orientation entries must be +-1");
}

}  // namespace

std::vector<std::array<int, 4>> slot_signs(const SatLink& sl, const Orientation& o) {
    check_orientation(sl, o);
    std::vector<std::array<int, 4>> out(size_t(sl.m));
    for (int j = 0; j < sl.m; ++j)
        for (int s = 0; s < 4; ++s) {
            const SlotDescriptor& sd = sl.gadget.sentences[j].slots[s];
            out[j][s] = o.dir[sd.source_component] * sd.twist;
        }
    return out;
}

std::vector<std::array<int, 4>> slot_signs_traced(const SatLink& sl, const Orientation& o) {
    check_orientation(sl, o);
    std::vector<std::array<int, 4>> out(size_t(sl.m));
    for (int j = 0; j < sl.m; ++j)
        for (int s = 0; s < 4; ++s) {
            const SlotDescriptor& sd = sl.gadget.sentences[j].slots[s];
            int arc = sl.vertex_arc[sd.probe_curve][sd.probe_vertex];
            if (arc < 0) throw std::logic_error("gadget probe lost its arc");
            int comp = sl.diagram.component_of[arc];
            if (comp != sd.source_component)
                throw std::logic_error("gadget probe landed on a foreign component");
            const auto& path = sl.layout.arc_path[arc];
            PtD probe = to_double(sd.probe_point);
            int at = -1;
            for (int i = 0; i + 1 < int(path.size()); ++i)
                if (path[i].x == probe.x && path[i].y == probe.y) {
                    at = i;
                    break;
                }
            if (at < 0) throw std::logic_error("gadget probe point not on its arc");
            double dx = path[at + 1].x - path[at].x;
            double along = dx * double(sd.probe_flow.x);
            if (along == 0) throw std::logic_error("gadget probe direction degenerate");
            out[j][s] = o.dir[comp] * (along > 0 ? 1 : -1);
        }
    return out;
}

bool is_balanced(const SatLink& sl, const Orientation& o) {
    for (const auto& signs : slot_signs(sl, o)) {
        int sum = signs[0] + signs[1] + signs[2] + signs[3];
        if (sum != 0) return false;
    }
    return true;
}

Orientation encode(const SatLink& sl, const Assignment& a) {
    if (int(a.size()) != sl.n) throw std::invalid_argument("assignment length mismatch");
    Orientation o;
    o.dir.assign(size_t(sl.n) + 1, 1);
    for (int i = 0; i < sl.n; ++i) o.dir[i] = a[i] ? 1 : -1;
    return o;
}

Assignment decode(const SatLink& sl, const Orientation& o) {
    check_orientation(sl, o);
    int flip = o.dir[sl.n] == 1 ? 1 : -1;
    Assignment a(size_t(sl.n));
    for (int i = 0; i < sl.n; ++i) a[i] = o.dir[i] * flip == 1 ? 1 : 0;
    return a;
}

std::vector<Orientation> balanced_bruteforce(const SatLink& sl) {
    if (sl.n > 20) throw std::invalid_argument("balanced_bruteforce guarded to n <= 20");
    std::vector<Orientation> out;
    int bits = sl.n + 1;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        Orientation o;
        o.dir.resize(size_t(bits));
        for (int i = 0; i < bits; ++i) o.dir[i] = (mask >> i) & 1u ? 1 : -1;
        if (is_balanced(sl, o)) out.push_back(std::move(o));
    }
    return out;
}

SeifertStats seifert_stats(const SatLink& sl, const Assignment& a) {
    if (!satisfies(sl.instance, a))
        throw std::invalid_argument("seifert_stats needs a solving assignment");
    SeifertStats st;
    st.euler = i64(sl.n) + 1 - 4ll * sl.m;
    st.complexity_bound = 4ll * sl.m;
    std::vector<char> used(size_t(sl.n), 0);
    for (const auto& s : sl.instance.sentences)
        for (const Literal& lit : s) used[lit.var - 1] = 1;
    for (char u : used)
        if (!u) ++st.disc_components;
    if (st.disc_components > sl.n + 1) throw std::logic_error("disc component bound violated");
    return st;
}

std::vector<i64> gadget_windings(const SatLink& sl, const Orientation& o) {
    check_orientation(sl, o);
    std::vector<i64> out;
    for (const SentenceGadget& g : sl.gadget.sentences) {
        const BraidMeridian& mer = g.meridian;
        double mx = double(mer.x);
        i64 total = 0;
        auto scan = [&](const std::vector<PtD>& path, int comp, bool closed) {
            size_t count = path.size();
            size_t segs = closed ? count : count - 1;
            for (size_t i = 0; i < segs; ++i) {
                PtD a = path[i], b = path[(i + 1) % count];
                if (!((a.x < mx && b.x > mx) || (a.x > mx && b.x < mx))) continue;
                double y = a.y + (b.y - a.y) * (mx - a.x) / (b.x - a.x);
                if (y < double(mer.ylo) || y > double(mer.yhi)) continue;
                total += (b.x > a.x ? 1 : -1) * o.dir[comp];
            }
        };
        for (int arc = 0; arc < sl.diagram.num_arcs; ++arc)
            scan(sl.layout.arc_path[arc], sl.diagram.component_of[arc], false);
        for (const auto& [comp, path] : sl.layout.loop_path) scan(path, comp, true);
        if (total % 2 != 0) throw std::logic_error("odd meridian crossing count");
        out.push_back(std::llabs(total / 2));
    }
    return out;
}

}  // namespace hardlink
