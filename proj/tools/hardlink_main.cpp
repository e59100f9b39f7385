#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "hardlink/diagram_io.hpp"
#include "hardlink/hamlink.hpp"
#include "hardlink/manifold.hpp"
#include "hardlink/satlink.hpp"

using namespace hardlink;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write output file: " + path);
    out << content;
}

// Collects pass/fail lines; any failure flips the exit code to 1.
struct Report {
    bool json_mode = false;
    bool failed = false;
    nlohmann::ordered_json j = nlohmann::ordered_json::object();

    void info(const std::string& key, const std::string& value) {
        if (json_mode)
            j[key] = value;
        else
            std::cout << key << ": " << value << "\n";
    }
    void info(const std::string& key, long long value) {
        if (json_mode)
            j[key] = value;
        else
            std::cout << key << ": " << value << "\n";
    }
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        if (!ok) failed = true;
        if (json_mode)
            j["checks"][name] = ok;
        else
            std::cout << (ok ? "[PASS] " : "[FAIL] ") << name
                      << (detail.empty() || ok ? "" : ": " + detail) << "\n";
    }
    int finish() {
        if (json_mode) {
            j["ok"] = !failed;
            std::cout << j.dump(1) << "\n";
        }
        return failed ? kExitPropertyFailure : kExitOk;
    }
};

Orientation orientation_from_mask(unsigned mask, int bits) {
    Orientation o;
    for (int i = 0; i < bits; ++i) o.dir.push_back((mask >> i) & 1u ? 1 : -1);
    return o;
}

int run_sat2link(const std::string& in, const std::string& out, const std::string& svg) {
    SatLink sl = build_link(parse_instance(slurp(in)));
    if (!out.empty()) spit(out, diagram_to_json(sl.diagram, &sl.layout));
    if (!svg.empty()) spit(svg, render_svg(sl.diagram, sl.layout));
    std::cout << "components: " << sl.diagram.num_components
              << "\ncrossings: " << sl.diagram.crossings.size() << "\n";
    return kExitOk;
}

int run_sat_verify(const std::string& in, bool exhaustive, uint64_t seed, bool json_mode) {
    Instance ins = parse_instance(slurp(in));
    Report rep;
    rep.json_mode = json_mode;
    rep.info("variables", ins.n);
    rep.info("sentences", ins.m());

    std::vector<Assignment> sols = solve_bruteforce(ins);
    rep.info("solutions", i64(sols.size()));

    SatLink sl = build_link(ins);
    rep.check("diagram-valid", validate(sl.diagram).ok);
    rep.check("component-count", sl.diagram.num_components == ins.n + 1);
    rep.check("crossing-bound",
              i64(sl.diagram.crossings.size()) <= sat_crossing_bound(ins.n, ins.m()));

    for (const Assignment& a : sols) {
        Orientation o = encode(sl, a);
        rep.check("solution-encodes-balanced", is_balanced(sl, o));
        rep.check("decode-roundtrip", decode(sl, o) == a);
        if (rep.failed) break;
    }

    if (exhaustive) {
        if (ins.n > 20) throw std::invalid_argument("guard exceeded: --exhaustive needs n <= 20");
        std::vector<Orientation> balanced = balanced_bruteforce(sl);
        rep.info("balanced orientations", i64(balanced.size()));
        rep.check("balanced-count", balanced.size() == 2 * sols.size());
        bool decode_ok = true, traced_ok = true;
        for (const Orientation& o : balanced) {
            decode_ok = decode_ok && satisfies(ins, decode(sl, o));
            traced_ok = traced_ok && slot_signs_traced(sl, o) == slot_signs(sl, o);
        }
        rep.check("balanced-decode-solves", decode_ok);
        rep.check("traced-signs-agree", traced_ok);
    } else {
        std::mt19937_64 rng(seed);
        bool ok = true;
        for (int trial = 0; trial < 64 && ok; ++trial) {
            Orientation o = orientation_from_mask(unsigned(rng()), ins.n + 1);
            ok = is_balanced(sl, o) == satisfies(ins, decode(sl, o)) &&
                 slot_signs_traced(sl, o) == slot_signs(sl, o);
        }
        rep.check("sampled-balance-criterion", ok);
    }
    return rep.finish();
}

int run_graph2manifold(const std::string& in, const std::string& out, bool invariants,
                       bool json_mode) {
    FiniteGraph g = parse_graph(slurp(in));
    Triangulation t = build_manifold(g);
    if (!out.empty()) spit(out, format_triangulation(t));
    Report rep;
    rep.json_mode = json_mode;
    rep.info("tetrahedra", t.tet_count);
    TriangulationReport tr = validate_triangulation(t);
    rep.check("gluings-consistent", tr.gluings_ok);
    rep.check("closed", tr.closed);
    rep.check("orientable", tr.orientable);
    rep.check("euler-zero", tr.euler == 0);
    if (invariants) {
        H1 h = h1(t);
        rep.info("h1 free rank", h.free_rank);
        std::string tor;
        for (const Int& x : h.torsion) tor += (tor.empty() ? "" : " ") + x.str();
        rep.info("h1 torsion", tor.empty() ? "none" : tor);
    }
    return rep.finish();
}

int run_graph2sublink(const std::string& in, const std::string& out, const std::string& svg,
                      bool find_string, bool json_mode) {
    SimpleGraph g = simplify(parse_graph(slurp(in)));
    HamLink hl = build_link(g);
    Report rep;
    rep.json_mode = json_mode;
    rep.info("components", hl.diagram.num_components);
    rep.info("crossings", i64(hl.diagram.crossings.size()));
    SvgOptions opts;
    if (find_string) {
        if (g.n > 10) throw std::invalid_argument("guard exceeded: --find-string needs n <= 10");
        auto sub = find_string_sublink(hl);
        if (sub) {
            std::string s;
            for (int c : *sub) s += (s.empty() ? "" : " ") + std::to_string(c);
            rep.info("string sublink", s);
            rep.check("string-verified", check_string_of_trefoils(hl, *sub));
            opts.bold_components.insert(sub->begin(), sub->end());
        } else {
            rep.info("string sublink", "none");
        }
    }
    if (!out.empty()) spit(out, diagram_to_json(hl.diagram, &hl.layout));
    if (!svg.empty()) spit(svg, render_svg(hl.diagram, hl.layout, opts));
    return rep.finish();
}

int run_ham_verify(const std::string& in, int max_n, bool json_mode) {
    SimpleGraph g = simplify(parse_graph(slurp(in)));
    if (g.n > max_n) throw std::invalid_argument("guard exceeded: graph larger than --max-n");
    HamLink hl = build_link(g);
    Report rep;
    rep.json_mode = json_mode;
    rep.info("vertices", g.n);
    rep.info("edges", i64(g.edges.size()));
    rep.check("diagram-valid", validate(hl.diagram).ok);
    rep.check("component-count", hl.diagram.num_components == g.n + int(g.edges.size()));
    i64 cr = i64(hl.diagram.crossings.size());
    i64 n4 = i64(g.n) * g.n * g.n * g.n;
    rep.info("crossings", cr);
    rep.check("crossing-bound", cr <= n4 + 2);
    if (g.n >= 3)
        rep.check("crossing-bound-tight", cr <= n4 / 2 + 2ll * g.n * g.n + 3ll * g.n);
    IncidenceCheck inc = verify_incidence_linking(g, hl);
    rep.check("incidence-linking", inc.ok, inc.detail);

    bool has_path = hamiltonian_bruteforce(g).has_value();
    auto sub = find_string_sublink(hl);
    rep.info("hamiltonian path", has_path ? "yes" : "no");
    rep.check("string-iff-path", sub.has_value() == has_path);
    if (sub) {
        rep.check("string-size", int(sub->size()) == 2 * g.n - 1);
        rep.check("string-verified", check_string_of_trefoils(hl, *sub));
    }
    return rep.finish();
}

int run_check(const std::string& in) {
    ParsedDiagram pd = diagram_from_json(slurp(in));
    ValidationReport rep = validate(pd.diagram);
    if (rep.ok) {
        std::cout << "[PASS] diagram valid: " << pd.diagram.num_components << " components, "
                  << pd.diagram.crossings.size() << " crossings, " << rep.total_faces
                  << " faces\n";
        return kExitOk;
    }
    for (const ValidationIssue& issue : rep.issues)
        std::cout << "[FAIL] " << issue.check << ": " << issue.detail << "\n";
    return kExitPropertyFailure;
}

int run_render(const std::string& in, const std::string& svg, const std::string& bold) {
    ParsedDiagram pd = diagram_from_json(slurp(in));
    if (!pd.layout) throw std::invalid_argument("missing layout data in " + in);
    SvgOptions opts;
    std::istringstream ss(bold);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) opts.bold_components.insert(std::stoi(tok));
    spit(svg, render_svg(pd.diagram, *pd.layout, opts));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hardlink: link and 3-manifold hardness-gadget compiler"};
    app.require_subcommand(1);

    std::string in, out, svg, bold;
    bool exhaustive = false, invariants = false, find_string = false, json_mode = false;
    uint64_t seed = 20240810;
    int max_n = 6;

    auto* sat2link = app.add_subcommand("sat2link", "compile an instance into its link");
    sat2link->add_option("input", in)->required();
    sat2link->add_option("--out", out);
    sat2link->add_option("--svg", svg);

    auto* sat_verify = app.add_subcommand("sat-verify", "verify the balanced-orientation laws");
    sat_verify->add_option("input", in)->required();
    sat_verify->add_flag("--exhaustive", exhaustive);
    sat_verify->add_option("--seed", seed);
    sat_verify->add_flag("--json", json_mode);

    auto* g2m = app.add_subcommand("graph2manifold", "compile a graph into a triangulation");
    g2m->add_option("input", in)->required();
    g2m->add_option("--out", out);
    g2m->add_flag("--invariants", invariants);
    g2m->add_flag("--json", json_mode);

    auto* g2s = app.add_subcommand("graph2sublink", "compile a graph into its trefoil link");
    g2s->add_option("input", in)->required();
    g2s->add_option("--out", out);
    g2s->add_option("--svg", svg);
    g2s->add_flag("--find-string", find_string);
    g2s->add_flag("--json", json_mode);

    auto* hv = app.add_subcommand("ham-verify", "verify the string-of-trefoils laws");
    hv->add_option("input", in)->required();
    hv->add_option("--max-n", max_n);
    hv->add_flag("--json", json_mode);

    auto* check = app.add_subcommand("check", "validate a diagram file");
    check->add_option("input", in)->required();

    auto* render = app.add_subcommand("render", "render a diagram file to svg");
    render->add_option("input", in)->required();
    render->add_option("--svg", svg)->required();
    render->add_option("--bold", bold);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (sat2link->parsed()) return run_sat2link(in, out, svg);
        if (sat_verify->parsed()) return run_sat_verify(in, exhaustive, seed, json_mode);
        if (g2m->parsed()) return run_graph2manifold(in, out, invariants, json_mode);
        if (g2s->parsed()) return run_graph2sublink(in, out, svg, find_string, json_mode);
        if (hv->parsed()) return run_ham_verify(in, max_n, json_mode);
        if (check->parsed()) return run_check(in);
        if (render->parsed()) return run_render(in, svg, bold);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cerr << "error: unknown subcommand\n";
    return kExitInputError;
}
