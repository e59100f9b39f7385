#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardlink/graph.hpp"
#include "hardlink/planar.hpp"

namespace hardlink {

// Loop-free graph without parallel edges; edges stored with u < v, sorted.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Drops loops and collapses parallel edges; Hamiltonian paths are unaffected.
SimpleGraph simplify(const FiniteGraph& g);

// Vertices on a perturbed circle, one chord per edge, crossing pairs flagged
// by endpoint interleaving. The chord of the lower edge index passes over.
struct ChordLayout {
    std::vector<double> angle;
    std::vector<Pt> pos;
    std::vector<std::pair<int, int>> chord;  // per edge
    std::vector<std::vector<char>> crosses;  // symmetric edge-pair flags
    int crossing_count = 0;

    int over_edge(int e1, int e2) const { return std::min(e1, e2); }
};

ChordLayout layout(const SimpleGraph& g);

struct HamLink {
    LinkDiagram diagram;
    DiagramLayout layout;
    ChordLayout chords;
    SimpleGraph graph;
    std::vector<PlanarCrossing> crossing_info;

    int vertex_component(int v) const { return v; }
    int edge_component(int e) const { return graph.n + e; }
};

// Segment provenance kinds for the construction (braid tags cover the
// trefoil twist regions).
enum HamTag : int {
    kHamTagCollar = 30,
    kHamTagConnector = 31,
    kHamTagHook = 32,   // edge id in tag >> 8
    kHamTagChord = 33,  // edge id in tag >> 8
};

// Compile a simple graph into its link: a three-crossing trefoil per vertex
// and, per edge, an unknotted loop running out and back along the chord,
// clasping the trefoil at each endpoint with two crossings.
HamLink build_link(const SimpleGraph& g);

struct IncidenceCheck {
    bool ok = true;
    std::string detail;  // first offending pair when not ok
};

// |lk| = 1 exactly on incident (vertex, edge) component pairs, 0 otherwise.
IncidenceCheck verify_incidence_linking(const SimpleGraph& g, const HamLink& hl);

// Lexicographically least Hamiltonian path, if any. Guarded to n <= 10.
std::optional<std::vector<int>> hamiltonian_bruteforce(const SimpleGraph& g);

// Components of the path's vertices and edges: 2k-1 components for a path
// on k vertices.
std::vector<int> path_to_sublink(const HamLink& hl, const std::vector<int>& path);

// True when the subset's unit-linking graph is a single path with roles
// alternating trefoil/loop and trefoils at both ends.
bool check_string_of_trefoils(const HamLink& hl, const std::vector<int>& subset);

// The sublink of a Hamiltonian path, when the graph has one.
std::optional<std::vector<int>> find_string_sublink(const HamLink& hl);

}  // namespace hardlink
