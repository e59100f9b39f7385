#pragma once

#include <array>
#include <string>
#include <vector>

#include "hardlink/braid.hpp"
#include "hardlink/planar.hpp"

namespace hardlink {

// ---- exactly-one-in-three satisfiability instances ----

struct Literal {
    int var = 1;  // 1-based
    bool negated = false;
};

struct Instance {
    int n = 0;  // variables
    std::vector<std::array<Literal, 3>> sentences;

    int m() const { return int(sentences.size()); }
};

using Assignment = std::vector<uint8_t>;

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text format: header "p i3sat <n> <m>", then m lines of three signed
// 1-based variable indices (negative = negated literal).
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& ins);

bool satisfies(const Instance& ins, const Assignment& a);

// All solutions, by exhaustive enumeration. Guarded to n <= 24.
std::vector<Assignment> solve_bruteforce(const Instance& ins);

// ---- the compiled link ----

// One of the four strands entering a sentence's satellite gadget: three
// literal slots plus the slot banded to the extra disc.
struct SlotDescriptor {
    int source_component = -1;  // variable disc component, or the extra disc
    int twist = 1;              // -1 exactly on negated-literal slots
    int cable_copy = -1;        // which of the four satellite strands it opens
    // Diagram-level probe: a layout vertex inside the gadget together with
    // the braid flow direction there, used to read the traversal sign off
    // the final diagram.
    int probe_curve = -1;
    int probe_vertex = -1;
    Pt probe_point;
    Pt probe_flow;
};

struct SentenceGadget {
    std::array<SlotDescriptor, 4> slots;
    BraidMeridian meridian;  // cuts all satellite lanes once, for winding counts
    int q = 0;               // companion twist count
};

struct GadgetMap {
    std::vector<SentenceGadget> sentences;
};

struct SatLink {
    LinkDiagram diagram;
    DiagramLayout layout;
    GadgetMap gadget;
    Instance instance;
    int n = 0, m = 0;
    int companion_q = 0;  // 2m+3
    // Construction provenance, used by verification and tests.
    std::vector<PlanarCrossing> crossing_info;
    std::vector<std::vector<int>> vertex_arc;
};

// Provenance tags for non-braid segments (braid segments use BraidTag).
enum SatTag : int {
    kSatTagDisc = 10,
    kSatTagBand = 11,  // band id in tag >> 8
};

// Recorded crossing-count bound of the construction; independent of n.
i64 sat_crossing_bound(int n, int m);

// Compile an instance into its link: variable discs on one line, satellite
// sentence gadgets on a second, the extra disc below, two-strand bands with
// a half-twist per negated literal. Components 0..n-1 are the variable
// discs, component n the extra disc.
SatLink build_link(const Instance& ins);

// Per sentence, the four strand signs: dir(source component) x twist.
std::vector<std::array<int, 4>> slot_signs(const SatLink& sl, const Orientation& o);

// Same signs read off the final diagram: the probe arc's direction against
// the braid flow at the recorded probe point.
std::vector<std::array<int, 4>> slot_signs_traced(const SatLink& sl, const Orientation& o);

// Balanced: every sentence has two strands running each way.
bool is_balanced(const SatLink& sl, const Orientation& o);

Orientation encode(const SatLink& sl, const Assignment& a);
Assignment decode(const SatLink& sl, const Orientation& o);

// All balanced orientations among the 2^(n+1) component orientations.
// Guarded to n <= 20.
std::vector<Orientation> balanced_bruteforce(const SatLink& sl);

struct SeifertStats {
    i64 euler = 0;             // n + 1 - 4m
    i64 complexity_bound = 0;  // 4m
    int disc_components = 0;   // isolated discs of the spanning surface
};

// Euler count and complexity bound of the orientable surface built from a
// solution: n+1 discs, 2m annuli, 4m bands.
SeifertStats seifert_stats(const SatLink& sl, const Assignment& a);

// |sum of strand traversals| per sentence gadget, counted geometrically at
// the gadget meridian. Zero exactly when the sentence is balanced.
std::vector<i64> gadget_windings(const SatLink& sl, const Orientation& o);

}  // namespace hardlink
