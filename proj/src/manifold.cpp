#include "hardlink/manifold.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hardlink {

// ---- graph text format ----

FiniteGraph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    FiniteGraph g;
    if (!(ss >> g.n) || g.n < 0) throw std::invalid_argument("graph file: bad vertex count");
    long long u, v;
    while (ss >> u) {
        if (!(ss >> v)) throw std::invalid_argument("graph file: dangling edge endpoint");
        if (u < 1 || u > g.n || v < 1 || v > g.n)
            throw std::invalid_argument("graph file: endpoint out of range");
        g.edges.push_back({int(u - 1), int(v - 1)});
    }
    return g;
}

std::string format_graph(const FiniteGraph& g) {
    std::ostringstream os;
    os << g.n << "\n";
    for (auto [u, v] : g.edges) os << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

// ---- permutations and gluings ----

Perm4 Perm4::inverse() const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.img[img[size_t(i)]] = uint8_t(i);
    return out;
}

int Perm4::parity() const {
    int p = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (img[size_t(i)] > img[size_t(j)]) ++p;
    return p % 2;
}

std::string Perm4::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) s += char('0' + img[size_t(i)]);
    return s;
}

Perm4 Perm4::parse(const std::string& s) {
    if (s.size() != 4) throw std::invalid_argument("permutation needs four digits");
    Perm4 p;
    int seen = 0;
    for (int i = 0; i < 4; ++i) {
        if (s[i] < '0' || s[i] > '3') throw std::invalid_argument("bad permutation digit");
        p.img[size_t(i)] = uint8_t(s[i] - '0');
        seen |= 1 << (s[i] - '0');
    }
    if (seen != 15) throw std::invalid_argument("permutation digits must be a bijection");
    return p;
}

void Triangulation::add_gluing(int t, int f, int t2, int f2, const Perm4& p) {
    if (t < 0 || t >= tet_count || t2 < 0 || t2 >= tet_count || f < 0 || f > 3 || f2 < 0 ||
        f2 > 3)
        throw std::invalid_argument("gluing out of range");
    if (t == t2 && f == f2) throw std::invalid_argument("face glued to itself");
    if (p[f] != f2) throw std::invalid_argument("gluing permutation must map face to face");
    if (glue[size_t(t)][size_t(f)] || glue[size_t(t2)][size_t(f2)])
        throw std::invalid_argument("face already glued");
    glue[size_t(t)][size_t(f)] = Gluing{t2, f2, p};
    glue[size_t(t2)][size_t(f2)] = Gluing{t, f, p.inverse()};
}

// ---- the thickened-surface piece ----

namespace {

// Union-find, optionally weighted by a Z/2 orientation parity.
struct UnionFind {
    std::vector<int> parent;
    std::vector<char> parity;
    bool coherent = true;

    explicit UnionFind(size_t n) : parent(n), parity(n, 0) {
        for (size_t i = 0; i < n; ++i) parent[i] = int(i);
    }

    // Returns (root, parity of the path x -> root), compressing as it goes.
    std::pair<int, int> find(int x) {
        int r = x, p = 0;
        while (parent[r] != r) {
            p ^= parity[r];
            r = parent[r];
        }
        int at = x, to_root = p;
        while (parent[at] != r) {
            int next = parent[at];
            int step = parity[at];
            parent[at] = r;
            parity[at] = char(to_root);
            to_root ^= step;
            at = next;
        }
        return {r, p};
    }

    void unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != rel) coherent = false;
            return;
        }
        parent[ra] = rb;
        parity[ra] = char(pa ^ pb ^ rel);
    }

    int count_roots() {
        int c = 0;
        for (size_t i = 0; i < parent.size(); ++i)
            if (parent[i] == int(i)) ++c;
        return c;
    }
};

// Corners of face f (the corners of the tet other than f), ascending.
std::array<int, 3> face_corners(int f) {
    std::array<int, 3> out{};
    int k = 0;
    for (int c = 0; c < 4; ++c)
        if (c != f) out[size_t(k++)] = c;
    return out;
}

int edge_index(int a, int b) {
    // Unordered corner pairs 0..5 in lex order.
    if (a > b) std::swap(a, b);
    static const int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return idx[a][b];
}

const int kEdgePairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

Piece build_piece(int d) {
    if (d < 0) throw std::invalid_argument("boundary count must be nonnegative");
    // Surface polygon: sides a b A B then (c_i r_i C_i) per boundary; fan
    // triangulation from corner 0. Side classes are oriented along the first
    // side of each pair, boundary sides along the polygon.
    const int N = d == 0 ? 4 : 3 * d + 4;
    const int ntri = N - 2;

    auto is_second = [&](int p) { return p == 2 || p == 3 || (p >= 6 && p % 3 == 0); };
    auto is_boundary = [&](int p) { return p >= 5 && p % 3 == 2; };
    auto partner = [&](int p) {
        if (p == 0 || p == 2) return 2 - p + 0;
        if (p == 1 || p == 3) return 4 - p;
        return p % 3 == 1 ? p + 2 : p - 2;  // c_i at 3i+1 pairs with C_i at 3i+3
    };

    // Directed edge incidences per class: (triangle, local positions of the
    // tail and head in the prism order).
    struct Incidence {
        int tri;
        int u, v;  // local order positions 0,1,2 = x,y,z
    };
    std::map<int, std::vector<Incidence>> classes;  // class id -> incidences
    std::map<int, bool> boundary_class;

    // Local order per triangle: corner A = polygon vertex 0 always first.
    // The side edge decides whether B or C comes second.
    std::vector<std::array<int, 3>> local_poly(static_cast<size_t>(ntri));  // positions -> polygon corner
    for (int k = 0; k < ntri; ++k) {
        int B = k + 1, C = k + 2;
        int side = k + 1;  // polygon side between B and C
        bool b_before_c = !is_second(side);
        int x = 0, y = b_before_c ? B : C, z = b_before_c ? C : B;
        local_poly[size_t(k)] = {x, y, z};

        auto record = [&](int cls, bool bd, int pu, int pv) {
            classes[cls].push_back({k, pu, pv});
            boundary_class[cls] = bd;
        };
        // Edge A->B: side 0 for the first triangle, else a diagonal.
        {
            int cls = k == 0 ? 1000 + 0 : k + 1;
            record(cls, false, 0, b_before_c ? 1 : 2);
        }
        // Edge A->C: the last side for the last triangle, else a diagonal.
        {
            int cls = k == ntri - 1 ? 1000 + partner(N - 1) : k + 2;
            record(cls, false, 0, b_before_c ? 2 : 1);
        }
        // The side between B and C, canonically oriented; the local order was
        // chosen so its direction is always y -> z.
        {
            int cls = 1000 + (is_second(side) ? partner(side) : side);
            record(cls, is_boundary(side), 1, 2);
        }
    }

    Piece piece;
    piece.surface_triangles = ntri;
    piece.tri = Triangulation(3 * ntri);
    Triangulation& tri = piece.tri;
    auto tetA = [](int k) { return 3 * k; };
    auto tetB = [](int k) { return 3 * k + 1; };
    auto tetC = [](int k) { return 3 * k + 2; };

    // Prism interior and the circle direction: top glued back to bottom.
    for (int k = 0; k < ntri; ++k) {
        tri.add_gluing(tetA(k), 2, tetB(k), 2, Perm4{});
        tri.add_gluing(tetB(k), 1, tetC(k), 1, Perm4{});
        tri.add_gluing(tetA(k), 3, tetC(k), 0, Perm4{{1, 2, 3, 0}});
    }

    // Square side faces per directed edge, as (tet, face, corners of
    // (u0,v0,v1)) and (tet, face, corners of (u0,u1,v1)).
    struct SquareFaces {
        TorusFace lower, upper;
    };
    auto square_faces = [&](const Incidence& in) -> SquareFaces {
        SquareFaces s;
        int A = tetA(in.tri), B = tetB(in.tri), C = tetC(in.tri);
        if (in.u == 0 && in.v == 1) {  // (x,y)
            s.lower = {B, 3, {0, 1, 2}};
            s.upper = {C, 3, {0, 1, 2}};
        } else if (in.u == 1 && in.v == 2) {  // (y,z)
            s.lower = {A, 0, {1, 2, 3}};
            s.upper = {B, 0, {1, 2, 3}};
        } else if (in.u == 0 && in.v == 2) {  // (x,z)
            s.lower = {A, 1, {0, 2, 3}};
            s.upper = {C, 2, {0, 1, 3}};
        } else {
            throw std::logic_error("edge direction disagrees with the local order");
        }
        return s;
    };

    for (auto& [cls, inc] : classes) {
        if (boundary_class[cls]) {
            if (inc.size() != 1) throw std::logic_error("boundary side recorded twice");
            SquareFaces s = square_faces(inc[0]);
            piece.boundary.push_back({s.lower, s.upper});
            continue;
        }
        if (inc.size() != 2) throw std::logic_error("interior edge class not doubly incident");
        SquareFaces s1 = square_faces(inc[0]);
        SquareFaces s2 = square_faces(inc[1]);
        for (auto [f1, f2] : {std::pair{s1.lower, s2.lower}, std::pair{s1.upper, s2.upper}}) {
            Perm4 p;
            for (int i = 0; i < 3; ++i) p.img[size_t(f1.corner[size_t(i)])] = uint8_t(f2.corner[size_t(i)]);
            p.img[size_t(f1.face)] = uint8_t(f2.face);
            tri.add_gluing(f1.tet, f1.face, f2.tet, f2.face, p);
        }
    }
    return piece;
}

void glue_marked_tori(Triangulation& tri, const MarkedTorus& a, const MarkedTorus& b,
                      const std::array<int, 4>& model_map) {
    auto face_model_corners = [](bool lower) -> std::array<int, 3> {
        return lower ? std::array<int, 3>{0, 1, 3} : std::array<int, 3>{0, 2, 3};
    };
    auto model_slot = [&](bool lower, int model) -> int {
        auto models = face_model_corners(lower);
        for (int i = 0; i < 3; ++i)
            if (models[size_t(i)] == model) return i;
        return -1;
    };

    for (bool a_lower : {true, false}) {
        const TorusFace& from = a_lower ? a.lower : a.upper;
        // Image triangle: where the mapped model corners land.
        auto models = face_model_corners(a_lower);
        std::array<int, 3> image{};
        for (int i = 0; i < 3; ++i) image[size_t(i)] = model_map[size_t(models[size_t(i)])];
        bool to_lower;
        {
            std::array<int, 3> sorted = image;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == std::array<int, 3>{0, 1, 3})
                to_lower = true;
            else if (sorted == std::array<int, 3>{0, 2, 3})
                to_lower = false;
            else
                throw std::invalid_argument("model map does not send triangles to triangles");
        }
        const TorusFace& to = to_lower ? b.lower : b.upper;
        Perm4 p;
        for (int i = 0; i < 3; ++i) {
            int slot = model_slot(to_lower, image[size_t(i)]);
            if (slot < 0) throw std::logic_error("mapped model corner missing");
            p.img[size_t(from.corner[size_t(i)])] = uint8_t(to.corner[size_t(slot)]);
        }
        p.img[size_t(from.face)] = uint8_t(to.face);
        tri.add_gluing(from.tet, from.face, to.tet, to.face, p);
    }
}

Triangulation build_manifold(const FiniteGraph& g) {
    // Edge endpoints per vertex in (edge, end) order; a loop contributes two.
    std::vector<std::vector<std::pair<int, int>>> ends(size_t(std::max(g.n, 0)));
    for (int e = 0; e < int(g.edges.size()); ++e) {
        auto [u, v] = g.edges[size_t(e)];
        if (u < 0 || u >= g.n || v < 0 || v >= g.n)
            throw std::invalid_argument("edge endpoint out of range");
        ends[size_t(u)].push_back({e, 0});
        ends[size_t(v)].push_back({e, 1});
    }
    for (auto& lst : ends) std::sort(lst.begin(), lst.end());

    // Build all pieces into one triangulation with tet offsets.
    Triangulation tri(0);
    std::vector<std::vector<MarkedTorus>> torus_of(size_t(g.n));
    for (int v = 0; v < g.n; ++v) {
        Piece piece = build_piece(int(ends[size_t(v)].size()));
        int off = tri.tet_count;
        tri.tet_count += piece.tri.tet_count;
        for (auto& faces : piece.tri.glue) {
            for (auto& og : faces)
                if (og) og->tet += off;
            tri.glue.push_back(faces);
        }
        for (MarkedTorus t : piece.boundary) {
            t.lower.tet += off;
            t.upper.tet += off;
            torus_of[size_t(v)].push_back(t);
        }
    }

    // Per edge: the two corresponding tori, glued by the swap.
    for (int e = 0; e < int(g.edges.size()); ++e) {
        auto [u, v] = g.edges[size_t(e)];
        auto slot = [&](int vert, int end) {
            const auto& lst = ends[size_t(vert)];
            return int(std::lower_bound(lst.begin(), lst.end(), std::pair{e, end}) -
                       lst.begin());
        };
        glue_marked_tori(tri, torus_of[size_t(u)][size_t(slot(u, 0))],
                         torus_of[size_t(v)][size_t(slot(v, 1))], kFibreLongitudeSwap);
    }
    return tri;
}

// ---- validation and homology ----

TriangulationReport validate_triangulation(const Triangulation& t) {
    TriangulationReport rep;
    // Gluing table shape, involution, inverse permutations.
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& og = t.at(tet, f);
            if (!og) continue;
            const Gluing& g = *og;
            if (g.tet < 0 || g.tet >= t.tet_count || g.face < 0 || g.face > 3 ||
                g.perm[f] != g.face) {
                rep.gluings_ok = false;
                rep.issues.push_back("malformed gluing at tet " + std::to_string(tet));
                continue;
            }
            if (g.tet == tet && g.face == f) {
                rep.gluings_ok = false;
                rep.issues.push_back("face glued to itself at tet " + std::to_string(tet));
                continue;
            }
            const auto& back = t.at(g.tet, g.face);
            if (!back || back->tet != tet || back->face != f || !(back->perm == g.perm.inverse())) {
                rep.gluings_ok = false;
                rep.issues.push_back("gluing not an involution at tet " + std::to_string(tet) +
                                     " face " + std::to_string(f));
            }
        }
    if (!rep.gluings_ok) return rep;

    int open_faces = 0;
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f)
            if (!t.at(tet, f)) ++open_faces;
    rep.closed = open_faces == 0;

    // Cell census via identifications.
    UnionFind verts(size_t(t.tet_count) * 4);
    UnionFind edges(size_t(t.tet_count) * 6);
    int glued_pairs = 0;
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& og = t.at(tet, f);
            if (!og) continue;
            ++glued_pairs;
            for (int c : face_corners(f))
                verts.unite(tet * 4 + c, og->tet * 4 + og->perm[c], 0);
            auto fc = face_corners(f);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    int a = fc[size_t(i)], b = fc[size_t(j)];
                    int a2 = og->perm[a], b2 = og->perm[b];
                    int rel = ((a < b) != (std::min(a2, b2) == a2)) ? 1 : 0;
                    edges.unite(tet * 6 + edge_index(a, b), og->tet * 6 + edge_index(a2, b2),
                                rel);
                }
        }
    rep.vertices = verts.count_roots();
    rep.edges = edges.count_roots();
    rep.faces = glued_pairs / 2 + open_faces;
    rep.euler = rep.vertices - rep.edges + rep.faces - t.tet_count;

    // Orientability: a +-1 per tetrahedron with every gluing permutation odd
    // between coherently oriented tetrahedra.
    std::vector<int> sign(size_t(t.tet_count), 0);
    rep.orientable = true;
    for (int seed = 0; seed < t.tet_count && rep.orientable; ++seed) {
        if (sign[size_t(seed)] != 0) continue;
        sign[size_t(seed)] = 1;
        std::vector<int> stack{seed};
        while (!stack.empty() && rep.orientable) {
            int tet = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& og = t.at(tet, f);
                if (!og) continue;
                int want = og->perm.parity() == 1 ? sign[size_t(tet)] : -sign[size_t(tet)];
                int& s = sign[size_t(og->tet)];
                if (s == 0) {
                    s = want;
                    stack.push_back(og->tet);
                } else if (s != want) {
                    rep.orientable = false;
                    break;
                }
            }
        }
    }
    return rep;
}

namespace {

struct CellIndex {
    // Representative-based indices for identified cells, with a sign for
    // oriented edges.
    std::vector<int> vert_class, edge_class;
    std::vector<int> edge_sign;  // parity of each (tet,pair) against its class rep
    int nv = 0, ne = 0;
};

CellIndex build_cells(const Triangulation& t) {
    UnionFind verts(size_t(t.tet_count) * 4);
    UnionFind edges(size_t(t.tet_count) * 6);
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& og = t.at(tet, f);
            if (!og) continue;
            for (int c : face_corners(f)) verts.unite(tet * 4 + c, og->tet * 4 + og->perm[c], 0);
            auto fc = face_corners(f);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    int a = fc[size_t(i)], b = fc[size_t(j)];
                    int a2 = og->perm[a], b2 = og->perm[b];
                    int rel = ((a < b) != (std::min(a2, b2) == a2)) ? 1 : 0;
                    edges.unite(tet * 6 + edge_index(a, b), og->tet * 6 + edge_index(a2, b2),
                                rel);
                }
        }
    if (!edges.coherent)
        throw std::logic_error("edge identifications reverse orientation; chain complex invalid");

    CellIndex ci;
    ci.vert_class.resize(size_t(t.tet_count) * 4);
    ci.edge_class.resize(size_t(t.tet_count) * 6);
    ci.edge_sign.resize(size_t(t.tet_count) * 6);
    std::map<int, int> vmap, emap;
    for (int i = 0; i < t.tet_count * 4; ++i) {
        int root = verts.find(i).first;
        auto [it, fresh] = vmap.insert({root, ci.nv});
        if (fresh) ++ci.nv;
        ci.vert_class[size_t(i)] = it->second;
    }
    for (int i = 0; i < t.tet_count * 6; ++i) {
        auto [root, parity] = edges.find(i);
        auto [it, fresh] = emap.insert({root, ci.ne});
        if (fresh) ++ci.ne;
        ci.edge_class[size_t(i)] = it->second;
        ci.edge_sign[size_t(i)] = parity ? -1 : 1;
    }
    return ci;
}

}  // namespace

H1 h1(const Triangulation& t) {
    TriangulationReport rep = validate_triangulation(t);
    if (!rep.gluings_ok) throw std::invalid_argument("invalid triangulation");
    CellIndex ci = build_cells(t);

    // Faces: one column per identified face class (representative side).
    std::vector<std::pair<int, int>> face_reps;
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& og = t.at(tet, f);
            if (og && (og->tet < tet || (og->tet == tet && og->face < f))) continue;
            face_reps.push_back({tet, f});
        }

    IntMatrix d2(ci.ne, int(face_reps.size()));
    for (int col = 0; col < int(face_reps.size()); ++col) {
        auto [tet, f] = face_reps[size_t(col)];
        auto fc = face_corners(f);  // ascending corners c0 < c1 < c2
        int sgn[3] = {1, -1, 1};
        const std::pair<int, int> pairs[3] = {{fc[1], fc[2]}, {fc[0], fc[2]}, {fc[0], fc[1]}};
        for (int k = 0; k < 3; ++k) {
            int idx = tet * 6 + edge_index(pairs[k].first, pairs[k].second);
            d2.at(ci.edge_class[size_t(idx)], col) += sgn[k] * ci.edge_sign[size_t(idx)];
        }
    }

    IntMatrix d1(ci.nv, ci.ne);
    {
        std::vector<char> done(size_t(ci.ne), 0);
        for (int tet = 0; tet < t.tet_count; ++tet)
            for (int e = 0; e < 6; ++e) {
                int idx = tet * 6 + e;
                int cls = ci.edge_class[size_t(idx)];
                if (done[size_t(cls)]) continue;
                if (ci.edge_sign[size_t(idx)] != 1) continue;  // pick an aligned rep
                done[size_t(cls)] = 1;
                int a = kEdgePairs[e][0], b = kEdgePairs[e][1];
                d1.at(ci.vert_class[size_t(tet * 4 + b)], cls) += 1;
                d1.at(ci.vert_class[size_t(tet * 4 + a)], cls) -= 1;
            }
    }

    // d1 * d2 must vanish.
    IntMatrix prod = multiply(d1, d2);
    for (const Int& x : prod.a)
        if (x != 0) throw std::logic_error("boundary of boundary is nonzero");

    SnfResult s2 = snf(d2);
    SnfResult s1 = snf(d1);
    H1 out;
    out.free_rank = (ci.ne - s1.rank) - s2.rank;
    for (const Int& d : s2.diag)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// ---- text format ----

std::string format_triangulation(const Triangulation& t) {
    std::ostringstream os;
    os << "tets " << t.tet_count << "\n";
    for (int tet = 0; tet < t.tet_count; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& og = t.at(tet, f);
            if (!og) continue;
            if (og->tet < tet || (og->tet == tet && og->face < f)) continue;
            os << tet << " " << f << " : " << og->tet << " " << og->face << " " << og->perm.str()
               << "\n";
        }
    return os.str();
}

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream ss(text);
    std::string word;
    int n = 0;
    if (!(ss >> word >> n) || word != "tets" || n < 0)
        throw std::invalid_argument("triangulation file: bad header");
    Triangulation t(n);
    std::vector<std::string> toks;
    while (ss >> word) toks.push_back(word);
    if (toks.size() % 6 != 0)
        throw std::invalid_argument("triangulation file: truncated gluing record");
    for (size_t i = 0; i < toks.size(); i += 6) {
        if (toks[i + 2] != ":") throw std::invalid_argument("triangulation file: expected ':'");
        t.add_gluing(std::stoi(toks[i]), std::stoi(toks[i + 1]), std::stoi(toks[i + 3]),
                     std::stoi(toks[i + 4]), Perm4::parse(toks[i + 5]));
    }
    return t;
}

}  // namespace hardlink
