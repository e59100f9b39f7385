#include "hardlink/hamlink.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hardlink/braid.hpp"

namespace hardlink {

SimpleGraph simplify(const FiniteGraph& g) {
    SimpleGraph s;
    s.n = g.n;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= g.n) throw std::invalid_argument("edge endpoint out of range");
        seen.insert({u, v});
    }
    s.edges.assign(seen.begin(), seen.end());
    return s;
}

namespace {

constexpr i64 kCollarRadius = 2500;
constexpr int kCollarSides = 32;

struct VertexFrame {
    double theta = 0;  // outward direction
    Pt pos;
    int rot = 0;  // quarter turns applied to the trefoil box
};

Pt rot90(Pt p, int times) {
    for (int i = 0; i < times % 4; ++i) p = {-p.y, p.x};
    return p;
}

Pt round_pt(double x, double y) { return {std::llround(x), std::llround(y)}; }

double tau() { return 8 * std::atan(1.0); }

struct CurveBuilderFacade {
    std::vector<Pt> pts;
    std::vector<int> level, tag;
    Role role;

    void seg(Pt p, int lvl, int tg) {
        level.push_back(lvl);
        tag.push_back(tg);
        pts.push_back(p);
    }
    // The duplicated closing point goes; its metadata closes the polyline.
    void drop_last_point() { pts.pop_back(); }
    CurveInput take() { return {std::move(pts), std::move(level), std::move(tag), role}; }
};

}  // namespace

ChordLayout layout(const SimpleGraph& g) {
    if (g.n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (g.n > 25) throw std::invalid_argument("layout guarded to n <= 25");
    ChordLayout cl;
    double radius = std::max(60000.0, 3000.0 * g.n * g.n);
    double eps = tau() / 2 / (double(g.n) * g.n * g.n);
    for (int v = 0; v < g.n; ++v) {
        double th = tau() * v / g.n + eps * v;
        cl.angle.push_back(th);
        cl.pos.push_back(round_pt(radius * std::cos(th), radius * std::sin(th)));
    }
    cl.chord = g.edges;
    int ne = int(g.edges.size());
    cl.crosses.assign(size_t(ne), std::vector<char>(size_t(ne), 0));
    for (int e1 = 0; e1 < ne; ++e1)
        for (int e2 = e1 + 1; e2 < ne; ++e2) {
            auto [a, b] = g.edges[size_t(e1)];
            auto [c, d] = g.edges[size_t(e2)];
            if (a == c || a == d || b == c || b == d) continue;
            auto inside = [&](int x) { return a < x && x < b; };
            if (inside(c) != inside(d)) {
                cl.crosses[size_t(e1)][size_t(e2)] = cl.crosses[size_t(e2)][size_t(e1)] = 1;
                ++cl.crossing_count;
            }
        }
    i64 quarter = i64(g.n) * g.n * g.n * g.n;
    if (8ll * cl.crossing_count > quarter)
        throw std::logic_error("chord crossings exceed the n^4/8 bound");
    return cl;
}

namespace {

struct HookPorts {
    // Outer ports where the chord strands attach, left/right of the chord
    // direction, plus the four hook polyline points.
    Pt outer_l, inner_l, inner_r, outer_r;
};

HookPorts hook_points(Pt v, double phi, int salt) {
    double ox = std::cos(phi), oy = std::sin(phi);
    double px = -oy, py = ox;  // left of the chord direction
    double r_out = double(kCollarRadius) + 40 + salt;
    double r_in = double(kCollarRadius) - 60 - salt;
    HookPorts h;
    h.outer_l = v + round_pt(r_out * ox + 8 * px, r_out * oy + 8 * py);
    h.inner_l = v + round_pt(r_in * ox + 8 * px, r_in * oy + 8 * py);
    h.inner_r = v + round_pt(r_in * ox - 8 * px, r_in * oy - 8 * py);
    h.outer_r = v + round_pt(r_out * ox - 8 * px, r_out * oy - 8 * py);
    return h;
}

struct CollarShape {
    std::vector<Pt> ring;  // open polyline from one cut end around to the other
    Pt cut_a, cut_b;       // cut_a continues the ring end, cut_b its start
};

CollarShape collar_shape(Pt v, double theta, int salt) {
    // Regular polygon phased so the cut edge brackets the outward direction.
    double phase = theta + double(salt) * 0.013;
    std::vector<Pt> pts;
    for (int t = 0; t < kCollarSides; ++t) {
        double a = phase + (2 * t + 1) * tau() / (2 * kCollarSides);
        pts.push_back(v + round_pt(kCollarRadius * std::cos(a), kCollarRadius * std::sin(a)));
    }
    // Cut the edge from pts.back() to pts.front() at +-8 around its middle.
    Pt e0 = pts.back(), e1 = pts.front();
    double mx = (e0.x + e1.x) / 2.0, my = (e0.y + e1.y) / 2.0;
    double ux = e1.x - e0.x, uy = e1.y - e0.y;
    double len = std::hypot(ux, uy);
    ux /= len;
    uy /= len;
    CollarShape c;
    c.cut_a = round_pt(mx - 8 * ux, my - 8 * uy);  // nearer pts.back()
    c.cut_b = round_pt(mx + 8 * ux, my + 8 * uy);  // nearer pts.front()
    c.ring = std::move(pts);
    return c;
}

int side_of(Pt axis, Pt rel) { return sgn(cross(axis, rel)); }

}  // namespace

HamLink build_link(const SimpleGraph& g) {
    ChordLayout chords = layout(g);
    int ne = int(g.edges.size());

    for (int salt = 0; salt < 8; ++salt) {
        // Trefoil twist region per vertex, rotated so its return arcs face
        // outward from the circle of vertices.
        BraidSpec spec;
        spec.q = 3;
        spec.k = 1;
        spec.lane_h = 16;
        spec.block_w = 32;
        spec.gap_w = 16;
        spec.margin = 12;
        const Pt anchor{(spec.x0 + spec.east_edge()) / 2, spec.lane_h / 2};

        std::vector<VertexFrame> frame(size_t(g.n));
        for (int v = 0; v < g.n; ++v) {
            frame[size_t(v)].theta = chords.angle[size_t(v)];
            frame[size_t(v)].pos = chords.pos[size_t(v)];
            double quarter = tau() / 4;
            frame[size_t(v)].rot =
                ((int)llround((chords.angle[size_t(v)] + quarter) / quarter)) % 4;
            if (frame[size_t(v)].rot < 0) frame[size_t(v)].rot += 4;
        }
        auto place = [&](int v, Pt p) {
            return frame[size_t(v)].pos + rot90(p - anchor, frame[size_t(v)].rot);
        };

        std::vector<CurveInput> curves;
        try {
            // Vertex components: twist region, two connector strands, collar.
            for (int v = 0; v < g.n; ++v) {
                BraidCut cut;
                cut.kind = BraidCut::ReturnBottom;
                cut.lane = 1;
                cut.cut_x = anchor.x;
                cut.half = 8;
                BraidPath box = braid_copy_path(spec, 0, cut, v);

                CollarShape collar = collar_shape(frame[size_t(v)].pos,
                                                  frame[size_t(v)].theta, salt);
                Pt w = rot90({0, -1}, frame[size_t(v)].rot);  // outward box axis
                Pt vpos = frame[size_t(v)].pos;

                auto connector = [&](Pt from_box, Pt collar_end) {
                    std::vector<Pt> path;
                    Pt q = from_box + 900 * w;
                    double cx = double(collar_end.x - vpos.x), cy = double(collar_end.y - vpos.y);
                    double scale = 1500.0 / std::hypot(cx, cy);
                    Pt r = vpos + round_pt(cx * scale, cy * scale);
                    path.push_back(q);
                    path.push_back(r);
                    path.push_back(collar_end);
                    return path;
                };

                // Match box cut ends to collar cut ends so the connector
                // ribbon keeps a consistent offset sign at both ends.
                Pt box_start = place(v, box.pts.front());
                Pt box_end = place(v, box.pts.back());
                Pt ca = collar.cut_a, cb = collar.cut_b;
                int side_box = side_of(w, box_end - box_start);
                Pt out_dir = (ca - vpos) + (cb - vpos);
                if (side_box != side_of(out_dir, ca - cb)) std::swap(ca, cb);

                CurveBuilderFacade b;
                b.role = {RoleKind::VertexTrefoil, v + 1};
                // Twist region, mapped into place.
                for (size_t i = 0; i < box.pts.size(); ++i) b.pts.push_back(place(v, box.pts[i]));
                for (size_t i = 0; i + 1 < box.pts.size(); ++i) {
                    b.level.push_back(box.level[i]);
                    b.tag.push_back(box.tag[i]);
                }
                // Out to the collar cut end matching box_end's side.
                for (Pt p : connector(box_end, ca)) b.seg(p, 35, kHamTagConnector | (v << 8));
                // Around the collar. ca continues into whichever ring end is
                // adjacent to it; the ring runs cut_b -> front ... back -> cut_a.
                bool forward = (ca == collar.cut_a);
                if (forward) {
                    for (auto it = collar.ring.rbegin(); it != collar.ring.rend(); ++it)
                        b.seg(*it, 50, kHamTagCollar | (v << 8));
                    b.seg(collar.cut_b, 50, kHamTagCollar | (v << 8));
                } else {
                    for (Pt p : collar.ring) b.seg(p, 50, kHamTagCollar | (v << 8));
                    b.seg(collar.cut_a, 50, kHamTagCollar | (v << 8));
                }
                // Back to the other box cut end.
                Pt other = forward ? collar.cut_b : collar.cut_a;
                std::vector<Pt> back = connector(box_start, other);
                std::reverse(back.begin(), back.end());
                for (size_t i = 1; i < back.size(); ++i)
                    b.seg(back[i], 35, kHamTagConnector | (v << 8));
                b.seg(box_start, 35, kHamTagConnector | (v << 8));
                b.drop_last_point();  // closes back at the twist region start
                curves.push_back(b.take());
            }

            // Edge components: hooks at both endpoints, two chord strands.
            for (int e = 0; e < ne; ++e) {
                auto [a, bvert] = g.edges[size_t(e)];
                Pt pa = chords.pos[size_t(a)], pb = chords.pos[size_t(bvert)];
                double phi_ab = std::atan2(double(pb.y - pa.y), double(pb.x - pa.x));
                double phi_ba = std::atan2(double(pa.y - pb.y), double(pa.x - pb.x));
                HookPorts ha = hook_points(pa, phi_ab, salt);
                HookPorts hb = hook_points(pb, phi_ba, salt);

                int lvl = 100 + 2 * (ne - e);  // lower edge index passes over
                int hook_tag = kHamTagHook | (e << 8);
                int chord_tag = kHamTagChord | (e << 8);
                CurveBuilderFacade b;
                b.role = {RoleKind::EdgeLoop, e + 1};
                b.pts.push_back(ha.outer_l);
                b.seg(ha.inner_l, 60, hook_tag);   // over the collar
                b.seg(ha.inner_r, 45, hook_tag);   // tip
                b.seg(ha.outer_r, 40, hook_tag);   // under the collar
                // ha right of a->b is the same plane side as hb left of b->a.
                b.seg(hb.outer_l, lvl, chord_tag);
                b.seg(hb.inner_l, 60, hook_tag);
                b.seg(hb.inner_r, 45, hook_tag);
                b.seg(hb.outer_r, 40, hook_tag);
                b.seg(ha.outer_l, lvl, chord_tag);
                b.drop_last_point();
                curves.push_back(b.take());
            }

            Planarized p = planarize(curves);
            HamLink hl;
            hl.diagram = std::move(p.diagram);
            hl.layout = std::move(p.layout);
            hl.layout.stroke = 4.0;
            hl.layout.under_gap = 12.0;
            hl.chords = std::move(chords);
            hl.graph = g;
            hl.crossing_info = std::move(p.crossings);
            return hl;
        } catch (const GeometryError&) {
            if (salt == 7) throw;
        }
    }
    throw GeometryError("unreachable");
}

IncidenceCheck verify_incidence_linking(const SimpleGraph& g, const HamLink& hl) {
    LinkingMatrix lk = linking_matrix(hl.diagram, Orientation::all_positive(hl.diagram.num_components));
    std::set<std::pair<int, int>> incident;
    for (int e = 0; e < int(g.edges.size()); ++e) {
        incident.insert({g.edges[size_t(e)].first, e});
        incident.insert({g.edges[size_t(e)].second, e});
    }
    IncidenceCheck out;
    for (int i = 0; i < lk.n && out.ok; ++i)
        for (int j = i + 1; j < lk.n && out.ok; ++j) {
            i64 want = 0;
            if (i < g.n && j >= g.n && incident.count({i, j - g.n})) want = 1;
            if (std::llabs(lk.at(i, j)) != want) {
                out.ok = false;
                out.detail = "components " + std::to_string(i) + " and " + std::to_string(j) +
                             ": |lk| = " + std::to_string(std::llabs(lk.at(i, j))) +
                             ", expected " + std::to_string(want);
            }
        }
    return out;
}

std::optional<std::vector<int>> hamiltonian_bruteforce(const SimpleGraph& g) {
    if (g.n > 10) throw std::invalid_argument("hamiltonian_bruteforce guarded to n <= 10");
    if (g.n == 1) return std::vector<int>{0};
    std::vector<std::vector<char>> adj(size_t(g.n), std::vector<char>(size_t(g.n), 0));
    for (auto [u, v] : g.edges) adj[size_t(u)][size_t(v)] = adj[size_t(v)][size_t(u)] = 1;
    std::vector<int> path;
    std::vector<char> used(size_t(g.n), 0);
    // Depth-first in ascending vertex order: the first full path found is
    // the lexicographically least one.
    auto dfs = [&](auto&& self, int at) -> bool {
        if (int(path.size()) == g.n) return true;
        for (int nxt = 0; nxt < g.n; ++nxt) {
            if (used[size_t(nxt)] || !adj[size_t(at)][size_t(nxt)]) continue;
            used[size_t(nxt)] = 1;
            path.push_back(nxt);
            if (self(self, nxt)) return true;
            path.pop_back();
            used[size_t(nxt)] = 0;
        }
        return false;
    };
    for (int start = 0; start < g.n; ++start) {
        used.assign(size_t(g.n), 0);
        used[size_t(start)] = 1;
        path.assign(1, start);
        if (dfs(dfs, start)) return path;
    }
    return std::nullopt;
}

std::vector<int> path_to_sublink(const HamLink& hl, const std::vector<int>& path) {
    std::map<std::pair<int, int>, int> edge_id;
    for (int e = 0; e < int(hl.graph.edges.size()); ++e) edge_id[hl.graph.edges[size_t(e)]] = e;
    std::vector<int> comps;
    std::set<int> seen;
    for (size_t i = 0; i < path.size(); ++i) {
        int v = path[i];
        if (v < 0 || v >= hl.graph.n || !seen.insert(v).second)
            throw std::invalid_argument("not a simple path in the graph");
        comps.push_back(hl.vertex_component(v));
        if (i + 1 < path.size()) {
            int u = path[i], w = path[i + 1];
            if (u > w) std::swap(u, w);
            auto it = edge_id.find({u, w});
            if (it == edge_id.end()) throw std::invalid_argument("path uses a missing edge");
            comps.push_back(hl.edge_component(it->second));
        }
    }
    return comps;
}

bool check_string_of_trefoils(const HamLink& hl, const std::vector<int>& subset) {
    if (subset.empty() || subset.size() % 2 == 0) return false;
    std::set<int> comps(subset.begin(), subset.end());
    if (comps.size() != subset.size()) return false;
    for (int c : subset)
        if (c < 0 || c >= hl.diagram.num_components) return false;

    LinkingMatrix lk =
        linking_matrix(hl.diagram, Orientation::all_positive(hl.diagram.num_components));
    std::map<int, std::vector<int>> adj;
    for (int a : subset)
        for (int b : subset)
            if (a < b && std::llabs(lk.at(a, b)) == 1) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }

    auto is_trefoil = [&](int c) {
        return hl.diagram.role_of[size_t(c)].kind == RoleKind::VertexTrefoil;
    };
    if (subset.size() == 1) return is_trefoil(subset[0]);

    // The unit-linking graph must be one simple path.
    std::vector<int> ends;
    for (int c : subset) {
        size_t deg = adj[c].size();
        if (deg > 2) return false;
        if (deg == 0) return false;
        if (deg == 1) ends.push_back(c);
    }
    if (ends.size() != 2) return false;

    // Walk it, checking alternation and connectivity.
    int prev = -1, at = std::min(ends[0], ends[1]);
    if (!is_trefoil(at)) return false;
    size_t steps = 1;
    bool expect_trefoil = true;
    while (true) {
        int nxt = -1;
        for (int cand : adj[at])
            if (cand != prev) nxt = cand;
        if (nxt < 0) break;
        prev = at;
        at = nxt;
        ++steps;
        expect_trefoil = !expect_trefoil;
        if (is_trefoil(at) != expect_trefoil) return false;
    }
    return steps == subset.size() && is_trefoil(at);
}

std::optional<std::vector<int>> find_string_sublink(const HamLink& hl) {
    auto path = hamiltonian_bruteforce(hl.graph);
    if (!path) return std::nullopt;
    return path_to_sublink(hl, *path);
}

}  // namespace hardlink
