#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hardlink/graph.hpp"
#include "hardlink/intmat.hpp"

namespace hardlink {

// Permutation of the four tetrahedron corners.
struct Perm4 {
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    int operator[](int i) const { return img[size_t(i)]; }
    Perm4 inverse() const;
    int parity() const;  // 0 even, 1 odd
    std::string str() const;
    static Perm4 parse(const std::string& s);

    friend bool operator==(const Perm4& a, const Perm4& b) { return a.img == b.img; }
};

struct Gluing {
    int tet = -1, face = -1;
    Perm4 perm;

    friend bool operator==(const Gluing& a, const Gluing& b) {
        return a.tet == b.tet && a.face == b.face && a.perm == b.perm;
    }
};

// Tetrahedra with face identifications. Face i of a tetrahedron is opposite
// corner i; a gluing permutation maps all four corners, sending face index
// to face index.
struct Triangulation {
    int tet_count = 0;
    std::vector<std::array<std::optional<Gluing>, 4>> glue;

    explicit Triangulation(int n = 0) : tet_count(n), glue(size_t(n)) {}

    const std::optional<Gluing>& at(int tet, int face) const { return glue[size_t(tet)][size_t(face)]; }

    // Sets both directions; rejects occupied faces and self-face gluings.
    void add_gluing(int t, int f, int t2, int f2, const Perm4& p);

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.tet_count == b.tet_count && a.glue == b.glue;
    }
};

// One boundary torus made of two triangles of a square-with-diagonal, with
// the marked and oriented fibre/longitude edges encoded through the model
// corners: 0 = base, 1 = longitude head, 2 = fibre head, 3 = diagonal head.
struct TorusFace {
    int tet = -1, face = -1;
    // Tet corners carrying the face's three model corners, lower in model
    // order (0,1,3), upper in model order (0,2,3).
    std::array<int, 3> corner{};
};

struct MarkedTorus {
    TorusFace lower, upper;
};

struct Piece {
    Triangulation tri;
    std::vector<MarkedTorus> boundary;
    int surface_triangles = 0;
};

// Thickened genus-1 surface with d boundary circles, crossed with the
// circle: 3 tetrahedra per surface triangle, 9d+6 in total (6 when d = 0).
// Every boundary torus is a two-triangle marked torus.
Piece build_piece(int d);

// Glue two marked tori by a model-corner bijection. model_map[i] is the
// image of model corner i; it must preserve the diagonal and send triangles
// to triangles. build_manifold uses the orientation-reversing
// fibre/longitude swap {0,2,1,3}.
void glue_marked_tori(Triangulation& tri, const MarkedTorus& a, const MarkedTorus& b,
                      const std::array<int, 4>& model_map);

constexpr std::array<int, 4> kFibreLongitudeSwap{0, 2, 1, 3};

// One piece per vertex (valence counts loop ends twice); per edge, the two
// corresponding tori are glued by the fibre/longitude swap.
Triangulation build_manifold(const FiniteGraph& g);

struct TriangulationReport {
    bool gluings_ok = true;
    bool closed = false;
    bool orientable = false;
    long long euler = 0;
    int vertices = 0, edges = 0, faces = 0;
    std::vector<std::string> issues;

    bool ok() const { return gluings_ok; }
};

TriangulationReport validate_triangulation(const Triangulation& t);

struct H1 {
    long long free_rank = 0;
    std::vector<Int> torsion;

    friend bool operator==(const H1& a, const H1& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// First homology of the identified complex: cokernel invariants of the
// face boundary map against the edge boundary map.
H1 h1(const Triangulation& t);

// Text format: "tets <N>" then one line per glued face pair:
// "<tet> <face> : <tet'> <face'> <perm>" with perm as four digits.
std::string format_triangulation(const Triangulation& t);
Triangulation parse_triangulation(const std::string& text);

}  // namespace hardlink
