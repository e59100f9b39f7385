// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "hardlink/diagram_io.hpp"
#include "hardlink/hamlink.hpp"
#include "hardlink/manifold.hpp"
#include "hardlink/satlink.hpp"

using namespace hardlink;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(const char* n) : name(n) {}

    void require(bool ok, const std::string& what) {
        if (!ok && problems.size() < 8) problems.push_back(what);
        if (!ok && problems.size() >= 8) problems.back() = "... more failures suppressed";
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    void finish() {
        double secs = seconds();
        if (problems.empty()) {
            std::printf("[PASS] %s (%.2fs)\n", name, secs);
        } else {
            ++g_failures;
            std::printf("[FAIL] %s (%.2fs)\n", name, secs);
            for (const std::string& p : problems) std::printf("       - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }
};

// Shared tallies for criterion 10.
long long g_diagrams_validated = 0;

bool validate_counted(const LinkDiagram& d) {
    ++g_diagrams_validated;
    return validate(d).ok;
}

const char* kSample3 =
    "p i3sat 3 3\n"
    "1 -2 3\n"
    "1 -1 3\n"
    "-1 -2 -3\n";

// Independent Seifert-circle counter (same as the unit-test oracle).
int seifert_circles(const LinkDiagram& d, const Orientation& o) {
    int n = d.num_arcs;
    std::vector<int> next(size_t(n), -1);
    auto forward = [&](int arc) { return o.dir[d.component_of[size_t(arc)]] == 1; };
    for (int c = 0; c < int(d.crossings.size()); ++c) {
        ArcEnd uh = d.under_in(c), ut = d.under_out(c);
        ArcEnd oh = d.over_in(c), ot = d.over_out(c);
        int u_in = forward(uh.arc) ? uh.arc : ut.arc;
        int u_out = u_in == uh.arc ? ut.arc : uh.arc;
        int o_in = forward(oh.arc) ? oh.arc : ot.arc;
        int o_out = o_in == oh.arc ? ot.arc : oh.arc;
        next[size_t(u_in)] = o_out;
        next[size_t(o_in)] = u_out;
    }
    std::vector<char> seen(size_t(n), 0);
    int circles = d.free_loops;
    for (int a0 = 0; a0 < n; ++a0) {
        if (seen[size_t(a0)]) continue;
        ++circles;
        for (int a = a0; !seen[size_t(a)]; a = next[size_t(a)]) seen[size_t(a)] = 1;
    }
    return circles;
}

std::vector<SimpleGraph> all_simple_graphs(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_edges.push_back({i, j});
    std::vector<SimpleGraph> out;
    for (unsigned mask = 0; mask < (1u << all_edges.size()); ++mask) {
        SimpleGraph g;
        g.n = n;
        for (size_t e = 0; e < all_edges.size(); ++e)
            if ((mask >> e) & 1u) g.edges.push_back(all_edges[e]);
        out.push_back(std::move(g));
    }
    return out;
}

SimpleGraph random_simple_graph(std::mt19937_64& rng, int n) {
    SimpleGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1u) g.edges.push_back({i, j});
    return g;
}

// Vertex sequence of a string-of-trefoils subset, when the subset decodes to
// a path in the graph; empty otherwise.
std::vector<int> decode_string(const HamLink& hl, const std::vector<int>& subset) {
    LinkingMatrix lk =
        linking_matrix(hl.diagram, Orientation::all_positive(hl.diagram.num_components));
    std::map<int, std::vector<int>> adj;
    for (int a : subset)
        for (int b : subset)
            if (a < b && std::llabs(lk.at(a, b)) == 1) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
    if (subset.size() == 1) return {subset[0]};
    int start = -1;
    for (int c : subset)
        if (adj[c].size() == 1 && hl.diagram.role_of[size_t(c)].kind == RoleKind::VertexTrefoil)
            start = start < 0 ? c : start;
    if (start < 0) return {};
    std::vector<int> verts;
    int prev = -1, at = start;
    while (true) {
        if (hl.diagram.role_of[size_t(at)].kind == RoleKind::VertexTrefoil) verts.push_back(at);
        int nxt = -1;
        for (int cand : adj[at])
            if (cand != prev) nxt = cand;
        if (nxt < 0) break;
        prev = at;
        at = nxt;
    }
    // Verify consecutive vertices are joined by the path's edge components.
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        bool joined = false;
        for (int e = 0; e < int(hl.graph.edges.size()); ++e) {
            auto [u, v] = hl.graph.edges[size_t(e)];
            if ((u == verts[i] && v == verts[i + 1]) || (v == verts[i] && u == verts[i + 1]))
                joined = true;
        }
        if (!joined) return {};
    }
    return verts;
}

// ---- criteria ----

void criterion1() {
    Criterion c("criterion 1: sample instance end-to-end");
    Instance ins = parse_instance(kSample3);
    auto sols = solve_bruteforce(ins);
    c.require(sols.size() == 1, "expected exactly one solution");
    c.require(!sols.empty() && sols[0] == Assignment{1, 1, 0}, "solution should be (T,T,F)");

    SatLink sl = build_link(ins);
    c.require(validate_counted(sl.diagram), "diagram invalid");
    c.require(sl.diagram.num_components == 4, "expected 4 components");
    c.require(sl.companion_q == 9, "companion should be the (2,9) twist region");
    for (const SentenceGadget& g : sl.gadget.sentences)
        c.require(g.q == 9, "every sentence carries the (2,9) companion");
    int block_crossings = 0;
    for (const PlanarCrossing& x : sl.crossing_info)
        if ((x.tag_under & 0xff) == kTagBlock && (x.tag_over & 0xff) == kTagBlock)
            ++block_crossings;
    c.require(block_crossings == 3 * 16 * 9, "expected 16*9 satellite crossings per sentence");

    auto balanced = balanced_bruteforce(sl);
    c.require(balanced.size() == 2, "expected exactly 2 balanced orientations");
    for (const Orientation& o : balanced)
        c.require(decode(sl, o) == Assignment{1, 1, 0}, "balanced orientation decodes wrong");

    SeifertStats st = seifert_stats(sl, sols[0]);
    c.require(st.euler == -8 && st.complexity_bound == 12, "seifert stats should be (-8, 12)");
    c.require(c.seconds() < 1.0, "runtime exceeded 1s");
    c.finish();
}

void criterion2() {
    Criterion c("criterion 2: balanced-orientation sweep");
    long long instances = 0;

    auto check_instance = [&](const Instance& ins) {
        ++instances;
        SatLink sl = build_link(ins);
        if (!validate_counted(sl.diagram)) {
            c.require(false, "invalid diagram for " + format_instance(ins));
            return;
        }
        auto sols = solve_bruteforce(ins);
        auto balanced = balanced_bruteforce(sl);
        c.require(balanced.size() == 2 * sols.size(),
                  "balanced count mismatch for " + format_instance(ins));
        for (const Assignment& a : sols) {
            Orientation o = encode(sl, a);
            c.require(is_balanced(sl, o), "solution not balanced for " + format_instance(ins));
            c.require(decode(sl, o) == a, "decode(encode) != id for " + format_instance(ins));
        }
    };

    // Exhaustive over literal patterns up to sentence order and in-sentence
    // literal order, n <= 3, m <= 2.
    for (int n = 1; n <= 3 && c.problems.empty(); ++n) {
        std::vector<std::array<Literal, 3>> sentences;
        std::vector<int> lits;
        for (int v = 1; v <= n; ++v) {
            lits.push_back(v);
            lits.push_back(-v);
        }
        for (size_t i = 0; i < lits.size(); ++i)
            for (size_t j = i; j < lits.size(); ++j)
                for (size_t k = j; k < lits.size(); ++k) {
                    auto lit = [&](int x) { return Literal{std::abs(x), x < 0}; };
                    sentences.push_back({lit(lits[i]), lit(lits[j]), lit(lits[k])});
                }
        for (size_t s1 = 0; s1 < sentences.size() && c.problems.empty(); ++s1) {
            Instance one;
            one.n = n;
            one.sentences = {sentences[s1]};
            check_instance(one);
            for (size_t s2 = s1; s2 < sentences.size() && c.problems.empty(); ++s2) {
                Instance two;
                two.n = n;
                two.sentences = {sentences[s1], sentences[s2]};
                check_instance(two);
            }
        }
    }
    long long exhaustive_count = instances;
    c.require(exhaustive_count >= 500, "exhaustive sweep too small");

    std::mt19937_64 rng(20240810);
    for (int trial = 0; trial < 200 && c.problems.empty(); ++trial) {
        Instance ins;
        ins.n = 1 + int(rng() % 4);
        int m = 1 + int(rng() % 4);
        for (int j = 0; j < m; ++j) {
            std::array<Literal, 3> s;
            for (int k = 0; k < 3; ++k)
                s[size_t(k)] = {1 + int(rng() % unsigned(ins.n)), (rng() & 1u) == 1u};
            ins.sentences.push_back(s);
        }
        check_instance(ins);
    }
    std::printf("       criterion 2 covered %lld instances (%lld exhaustive)\n", instances,
                exhaustive_count);
    c.require(c.seconds() < 120.0, "runtime exceeded 2 minutes");
    c.finish();
}

void criterion3() {
    Criterion c("criterion 3: companion complexity oracle");
    for (int m = 1; m <= 5; ++m) {
        int q = 2 * m + 3;
        LinkDiagram k = torus_knot_diagram(q);
        c.require(validate_counted(k), "torus knot diagram invalid");
        int s = seifert_circles(k, Orientation::all_positive(1));
        c.require(s == 2, "expected two Seifert circles");
        int genus = (q - s + 1) / 2;
        int chi_minus = 2 * genus - 1;
        c.require(chi_minus == 2 * m + 1,
                  "chi_- mismatch at m=" + std::to_string(m));
    }
    c.finish();
}

void criteria4_5_6() {
    Criterion c4("criterion 4: trefoil-link crossing bounds");
    Criterion c5("criterion 5: linking characterizes incidence");
    Criterion c6("criterion 6: string-of-trefoils equivalence");

    auto bound_check = [&](const SimpleGraph& g, const HamLink& hl) {
        i64 cr = i64(hl.diagram.crossings.size());
        i64 n4 = i64(g.n) * g.n * g.n * g.n;
        c4.require(cr <= n4 + 2, "crossing bound n^4+2 violated at n=" + std::to_string(g.n));
        if (g.n >= 3)
            c4.require(cr <= n4 / 2 + 2ll * g.n * g.n + 3ll * g.n,
                       "tight crossing bound violated at n=" + std::to_string(g.n));
        c4.require(validate_counted(hl.diagram), "diagram invalid");
    };

    auto prop41_check = [&](const SimpleGraph& g, const HamLink& hl, bool exhaustive_subsets) {
        bool has_path = hamiltonian_bruteforce(g).has_value();
        auto sub = find_string_sublink(hl);
        c6.require(sub.has_value() == has_path, "string sublink existence mismatch");
        if (sub) {
            c6.require(int(sub->size()) == 2 * g.n - 1, "string size is not 2n-1");
            c6.require(check_string_of_trefoils(hl, *sub), "found string fails the check");
        }
        if (exhaustive_subsets) {
            int total = hl.diagram.num_components;
            bool any = false;
            for (unsigned mask = 1; mask < (1u << total); ++mask) {
                std::vector<int> subset;
                for (int comp = 0; comp < total; ++comp)
                    if ((mask >> comp) & 1u) subset.push_back(comp);
                if (int(subset.size()) != 2 * g.n - 1) continue;
                if (!check_string_of_trefoils(hl, subset)) continue;
                any = true;
                auto verts = decode_string(hl, subset);
                c6.require(int(verts.size()) == g.n,
                           "string subset does not decode to a spanning path");
            }
            c6.require(any == has_path, "subset enumeration disagrees with the oracle");
        }
    };

    // All simple graphs through n = 5.
    for (int n = 1; n <= 5; ++n) {
        for (const SimpleGraph& g : all_simple_graphs(n)) {
            HamLink hl = build_link(g);
            bound_check(g, hl);
            c5.require(verify_incidence_linking(g, hl).ok,
                       "incidence linking failed at n=" + std::to_string(n));
            prop41_check(g, hl, n <= 4);
        }
    }
    // Random graphs: 300 with n <= 7 for the bounds and linking, 100 with
    // n = 6 for the equivalence.
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + int(rng() % 7);
        SimpleGraph g = random_simple_graph(rng, n);
        HamLink hl = build_link(g);
        bound_check(g, hl);
        c5.require(verify_incidence_linking(g, hl).ok, "incidence linking failed (random)");
    }
    for (int trial = 0; trial < 100; ++trial) {
        SimpleGraph g = random_simple_graph(rng, 6);
        HamLink hl = build_link(g);
        prop41_check(g, hl, false);
    }
    c6.require(c6.seconds() < 300.0, "runtime exceeded 5 minutes");
    c4.finish();
    c5.finish();
    c6.finish();
}

void criterion7() {
    Criterion c("criterion 7: manifold validity");
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200 && c.problems.empty(); ++trial) {
        int n = 1 + int(rng() % 5);
        SimpleGraph g = random_simple_graph(rng, n);
        FiniteGraph fg;
        fg.n = g.n;
        fg.edges = g.edges;
        Triangulation t = build_manifold(fg);
        TriangulationReport rep = validate_triangulation(t);
        c.require(rep.gluings_ok, "gluing involution violated");
        c.require(rep.closed, "manifold not closed");
        c.require(rep.orientable, "manifold not orientable");
        c.require(rep.euler == 0, "euler characteristic nonzero");
    }
    c.finish();
}

void criterion8() {
    Criterion c("criterion 8: isomorphism invariance of the invariant tuple");
    std::mt19937_64 rng(888);
    for (int trial = 0; trial < 50 && c.problems.empty(); ++trial) {
        FiniteGraph g;
        g.n = 1 + int(rng() % 4);
        int ne = int(rng() % 6);
        for (int e = 0; e < ne; ++e)
            g.edges.push_back({int(rng() % unsigned(g.n)), int(rng() % unsigned(g.n))});
        Triangulation t = build_manifold(g);
        H1 h = h1(t);
        std::vector<int> perm(size_t(g.n));
        for (int i = 0; i < g.n; ++i) perm[size_t(i)] = i;
        for (int rel = 0; rel < 10 && c.problems.empty(); ++rel) {
            std::shuffle(perm.begin(), perm.end(), rng);
            FiniteGraph r;
            r.n = g.n;
            for (auto [u, v] : g.edges) r.edges.push_back({perm[size_t(u)], perm[size_t(v)]});
            std::sort(r.edges.begin(), r.edges.end());
            Triangulation t2 = build_manifold(r);
            c.require(t2.tet_count == t.tet_count, "tet counts differ under relabeling");
            c.require(h1(t2) == h, "homology differs under relabeling");
        }
    }
    c.finish();
}

void criterion9() {
    Criterion c("criterion 9: homology and smith-form oracles");
    H1 h = h1(build_manifold(parse_graph("1\n")));
    c.require(h.free_rank == 3 && h.torsion.empty(),
              "single-vertex manifold should have H1 = Z^3");

    std::mt19937_64 rng(999);
    std::uniform_int_distribution<int> dim(1, 8), val(-9, 9);
    for (int trial = 0; trial < 1000 && c.problems.empty(); ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (Int& x : m.a) x = val(rng);
        SnfResult res = snf(m);  // verifies u*m*v = d and unimodularity internally
        for (size_t i = 0; i + 1 < res.diag.size(); ++i) {
            bool ok = res.diag[i] == 0 ? res.diag[i + 1] == 0
                                       : res.diag[i + 1] % res.diag[i] == 0;
            c.require(ok, "divisibility chain broken");
        }
    }
    c.require(c.seconds() < 60.0, "runtime exceeded 1 minute");
    c.finish();
}

void criterion10() {
    Criterion c("criterion 10: face law and byte-exact round trips");
    c.require(g_diagrams_validated > 1000, "expected the suite to validate many diagrams");

    // Face law on fresh gadget diagrams of every kind.
    for (const LinkDiagram& d :
         {torus_knot_diagram(9), cable4(torus_knot_diagram(5)),
          build_link(parse_instance(kSample3)).diagram}) {
        ValidationReport rep = validate(d);
        c.require(rep.ok, "diagram invalid");
        for (auto [v, f] : rep.piece_faces)
            c.require(f == v + 2, "face law violated");
    }

    // Serialization round trips.
    SatLink sl = build_link(parse_instance(kSample3));
    std::string j1 = diagram_to_json(sl.diagram, &sl.layout);
    ParsedDiagram pd = diagram_from_json(j1);
    c.require(pd.layout.has_value(), "layout lost in round trip");
    c.require(diagram_to_json(pd.diagram, &*pd.layout) == j1, "diagram json not byte-stable");

    Instance ins = parse_instance(kSample3);
    c.require(format_instance(parse_instance(format_instance(ins))) == format_instance(ins),
              "instance text not byte-stable");

    FiniteGraph g = parse_graph("4\n1 2\n2 3\n2 2\n");
    c.require(format_graph(parse_graph(format_graph(g))) == format_graph(g),
              "graph text not byte-stable");

    Triangulation t = build_manifold(g);
    std::string tt = format_triangulation(t);
    c.require(format_triangulation(parse_triangulation(tt)) == tt,
              "triangulation text not byte-stable");

    // Rendering matches the committed golden file byte for byte.
    std::string svg = render_svg(sl.diagram, sl.layout, SvgOptions{});
    std::ifstream golden(std::string(HARDLINK_GOLDEN_DIR) + "/sample3.svg", std::ios::binary);
    std::ostringstream os;
    os << golden.rdbuf();
    c.require(golden.good() && os.str() == svg, "svg differs from the golden file");
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criteria4_5_6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures;
}
