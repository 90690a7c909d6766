// lsg: command-line toolkit around the local sparse spanning graph library.
//
// Subcommands: gen, transform, span, edge, decompose, analyze, adversary.
// Exit codes: 0 success, 1 domain or parse errors, 2 exhaustive-cap and
// overflow refusals (so scripts can tell "off limits" from "bad input").

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsg/adversary.hpp"
#include "lsg/analysis.hpp"
#include "lsg/constructions.hpp"
#include "lsg/ilg.hpp"
#include "lsg/reference.hpp"
#include "lsg/spanner.hpp"

namespace {

using Clock = std::chrono::steady_clock;

// Ordered key-value report; every value is recomputable from the inputs and
// seed, and the duration line is last so reports stay comparable without it.
class Report {
public:
    explicit Report(std::string command) : start_(Clock::now()) { add("command", command); }

    void add(const std::string& key, const std::string& value) {
        lines_.push_back(key + ": " + value);
    }
    void add(const std::string& key, std::int64_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, double value) {
        std::ostringstream s;
        s << value;
        add(key, s.str());
    }

    std::string finish() const {
        std::ostringstream out;
        for (const auto& line : lines_)
            out << line << '\n';
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
        out << "duration-ms: " << ms << '\n';
        return out.str();
    }

    void print_and_save(const std::string& path) const {
        const std::string text = finish();
        std::cout << text;
        if (!path.empty()) {
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw lsg::DomainError("cannot write report file: " + path);
            out << text;
        }
    }

private:
    Clock::time_point start_;
    std::vector<std::string> lines_;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw lsg::DomainError("cannot write file: " + path);
    out << text;
}

void add_digest(Report& report, const lsg::Graph& g, const std::string& path) {
    report.add("input", path);
    report.add("n", static_cast<std::int64_t>(g.vertex_count()));
    report.add("d", static_cast<std::int64_t>(g.degree_bound()));
    report.add("edges", static_cast<std::int64_t>(g.edge_count()));
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string family;
    int n = 0;
    int rows = 0;
    int cols = 0;
    int degree = 3;
    std::uint64_t seed = 1;
    int min_girth = 3;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    Report report("gen");
    report.add("family", a.family);
    lsg::Graph g = [&] {
        if (a.family == "path")
            return lsg::make_path(a.n);
        if (a.family == "cycle")
            return lsg::make_cycle(a.n);
        if (a.family == "grid")
            return lsg::make_grid(a.rows, a.cols);
        if (a.family == "torus")
            return lsg::make_torus(a.rows, a.cols);
        if (a.family == "complete")
            return lsg::make_complete(a.n);
        if (a.family == "petersen")
            return lsg::make_petersen();
        if (a.family == "heawood")
            return lsg::make_heawood();
        if (a.family == "random-regular")
            return lsg::make_random_regular(a.n, a.degree, a.seed, a.min_girth);
        throw lsg::DomainError("unknown family: " + a.family);
    }();
    if (a.family == "random-regular") {
        report.add("seed", a.seed);
        report.add("min-girth", static_cast<std::int64_t>(a.min_girth));
    }
    lsg::save_ilg(g, a.out);
    report.add("n", static_cast<std::int64_t>(g.vertex_count()));
    report.add("d", static_cast<std::int64_t>(g.degree_bound()));
    report.add("edges", static_cast<std::int64_t>(g.edge_count()));
    report.add("out", a.out);
    report.print_and_save("");
    return 0;
}

// ---------------------------------------------------------------- transform

struct TransformArgs {
    std::string in;
    std::string out;
    bool replacement_product = false;
    std::string cloud_map_out;
    std::vector<int> subdivide;
    std::vector<int> bridge_join;
};

int cmd_transform(const TransformArgs& a) {
    Report report("transform");
    lsg::Graph g = lsg::load_ilg(a.in);
    add_digest(report, g, a.in);

    const int chosen = (a.replacement_product ? 1 : 0) + (a.subdivide.empty() ? 0 : 1) +
                       (a.bridge_join.empty() ? 0 : 1);
    if (chosen != 1)
        throw lsg::DomainError(
            "pick exactly one of --replacement-product, --subdivide, --bridge-join");

    if (a.replacement_product) {
        auto product = lsg::replacement_product(g);
        lsg::save_ilg(product.graph, a.out);
        report.add("transform", "replacement-product");
        report.add("out-n", static_cast<std::int64_t>(product.graph.vertex_count()));
        report.add("out-edges", static_cast<std::int64_t>(product.graph.edge_count()));
        if (!a.cloud_map_out.empty()) {
            std::ostringstream m;
            for (int v = 1; v <= g.vertex_count(); ++v) {
                m << "cloud " << v;
                for (int id : product.map.clouds[v - 1])
                    m << ' ' << id;
                m << '\n';
            }
            for (const auto& [orig, cross] : product.map.cross_edge)
                m << "cross " << orig.lo << ' ' << orig.hi << ' ' << cross.lo << ' ' << cross.hi
                  << '\n';
            write_file(a.cloud_map_out, m.str());
            report.add("cloud-map", a.cloud_map_out);
        }
    } else if (!a.subdivide.empty()) {
        if (a.subdivide.size() != 2)
            throw lsg::DomainError("--subdivide takes two vertex ids");
        lsg::Graph result = lsg::subdivide(g, lsg::EdgeKey(a.subdivide[0], a.subdivide[1]));
        lsg::save_ilg(result, a.out);
        report.add("transform", "subdivide");
        report.add("out-n", static_cast<std::int64_t>(result.vertex_count()));
    } else {
        if (a.bridge_join.size() != 4)
            throw lsg::DomainError("--bridge-join takes four vertex ids: u1 v1 u2 v2");
        auto artifact = lsg::bridge_join(g, lsg::EdgeKey(a.bridge_join[0], a.bridge_join[1]),
                                         lsg::EdgeKey(a.bridge_join[2], a.bridge_join[3]));
        lsg::save_ilg(artifact.graph, a.out);
        report.add("transform", "bridge-join");
        report.add("out-n", static_cast<std::int64_t>(artifact.graph.vertex_count()));
        report.add("bridge", "1 2");
    }
    report.add("out", a.out);
    report.print_and_save("");
    return 0;
}

// ---------------------------------------------------------------- span / edge

struct SpanArgs {
    std::string in;
    int k = 0;
    double epsilon = 0.0;
    double C = 0.0;
    bool accept_theoretical_k = false;
    bool all = false;
    int jobs = 1;
    std::string out;
    std::string stats_out;
};

int resolve_k(const SpanArgs& a, Report& report) {
    if (a.k > 0) {
        if (a.epsilon > 0.0 || a.C > 0.0)
            throw lsg::DomainError("pass either --k or --epsilon/--C, not both");
        return a.k;
    }
    if (a.epsilon > 0.0 && a.C > 0.0) {
        // The formula's k is never substituted silently: it is typically
        // astronomically large and would misrepresent what actually ran.
        if (!a.accept_theoretical_k)
            throw lsg::DomainError("--epsilon/--C need --accept-theoretical-k (the formula value "
                                   "is usually unrepresentable; prefer an explicit --k)");
        auto computed = lsg::compute_k(a.epsilon, a.C);
        report.add("theoretical-k-tower", computed.tower);
        if (!computed.k)
            throw lsg::OverflowError("theoretical k overflows: k = " + computed.tower);
        if (*computed.k > 1000000)
            throw lsg::OverflowError("theoretical k = " + std::to_string(*computed.k) +
                                     " is beyond any practical ball radius");
        return static_cast<int>(*computed.k);
    }
    throw lsg::DomainError("pass --k, or --epsilon with --C");
}

int cmd_span(const SpanArgs& a) {
    Report report("span");
    lsg::Graph g = lsg::load_ilg(a.in);
    add_digest(report, g, a.in);
    if (!a.all)
        throw lsg::DomainError("span needs --all (use `edge` for a single decision)");
    const int k = resolve_k(a, report);
    report.add("k", static_cast<std::int64_t>(k));

    auto result = lsg::span_all(g, k, a.jobs);
    report.add("kept", static_cast<std::int64_t>(result.kept.size()));
    report.add("dropped",
               static_cast<std::int64_t>(result.decisions.size() - result.kept.size()));
    report.add("max-probes", result.stats.max_probes);
    report.add("mean-probes", result.stats.mean_probes);
    if (result.stats.budget)
        report.add("budget", *result.stats.budget);
    else
        report.add("budget", std::string("unrepresentable"));

    if (!a.out.empty()) {
        std::ostringstream lines;
        for (const auto& d : result.decisions)
            lines << d.edge.lo << ' ' << d.edge.hi << ' ' << lsg::to_string(d.answer) << ' '
                  << d.probes_used << '\n';
        write_file(a.out, lines.str());
        report.add("out", a.out);
    }
    report.print_and_save(a.stats_out);
    return 0;
}

struct EdgeArgs {
    std::string in;
    int k = 1;
    std::vector<int> edge;
    std::string stats_out;
};

int cmd_edge(const EdgeArgs& a) {
    Report report("edge");
    lsg::Graph g = lsg::load_ilg(a.in);
    add_digest(report, g, a.in);
    if (a.edge.size() != 2)
        throw lsg::DomainError("--edge takes two vertex ids");
    lsg::EdgeKey e(a.edge[0], a.edge[1]);
    report.add("edge", std::to_string(e.lo) + " " + std::to_string(e.hi));
    report.add("k", static_cast<std::int64_t>(a.k));

    auto decision = lsg::edge_in_spanner(g, e, a.k);
    report.add("answer", lsg::to_string(decision.answer));
    report.add("probes", decision.probes_used);
    report.add("budget", lsg::max_probes_per_edge(g, a.k));
    if (decision.answer == lsg::Answer::No) {
        std::ostringstream path;
        for (std::size_t i = 0; i < decision.certificate.size(); ++i) {
            if (i > 0)
                path << ' ';
            path << decision.certificate[i];
        }
        report.add("certificate", path.str());
    }
    report.print_and_save(a.stats_out);
    return 0;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string in;
    int k_stop = 0;
    double C = 1.0;
    int cap = lsg::kExpansionCapForCuts;
    bool exhaustive_only = false;
    bool claim_non_expanding = false;
    std::string out;
    std::string stats_out;
};

int cmd_decompose(const DecomposeArgs& a) {
    Report report("decompose");
    lsg::Graph g = lsg::load_ilg(a.in);
    add_digest(report, g, a.in);
    report.add("k-stop", static_cast<std::int64_t>(a.k_stop));

    lsg::DecomposeOptions opts;
    opts.exhaustive_cap = a.cap;
    opts.exhaustive_only = a.exhaustive_only;
    opts.claim_f_non_expanding = a.claim_non_expanding;
    auto d = lsg::decompose(g, a.k_stop, a.C, opts);

    report.add("removed", static_cast<std::int64_t>(d.removed.size()));
    report.add("components", static_cast<std::int64_t>(d.components.size()));
    std::size_t largest = 0;
    for (const auto& comp : d.components)
        largest = std::max(largest, comp.size());
    report.add("largest-component", static_cast<std::int64_t>(largest));
    if (d.beta) {
        report.add("beta", *d.beta);
        report.add("beta-checked", d.beta_checked ? "true" : "false");
    }
    if (!a.out.empty()) {
        write_file(a.out, lsg::serialize_decomposition(d));
        report.add("out", a.out);
    }
    report.print_and_save(a.stats_out);
    return 0;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string in;
    bool girth = false;
    bool expansion = false;
    bool bridges = false;
    bool diameter = false;
    bool components = false;
    bool check_non_expanding = false;
    double C = 1.0;
    int expansion_cap = lsg::kExpansionCap;
    int non_expansion_cap = lsg::kNonExpansionCap;
    std::string stats_out;
};

int cmd_analyze(const AnalyzeArgs& a) {
    Report report("analyze");
    lsg::Graph g = lsg::load_ilg(a.in);
    add_digest(report, g, a.in);

    if (a.girth)
        report.add("girth", lsg::to_string(lsg::girth(g)));
    if (a.diameter)
        report.add("diameter", static_cast<std::int64_t>(lsg::diameter(g)));
    if (a.components)
        report.add("components",
                   static_cast<std::int64_t>(lsg::connected_components(g).size()));
    if (a.expansion) {
        auto result = lsg::expansion(g, a.expansion_cap);
        report.add("expansion", result.value.str() + " = " + std::to_string(result.value.to_double()));
        std::ostringstream cut;
        for (std::size_t i = 0; i < result.cut.members.size(); ++i) {
            if (i > 0)
                cut << ' ';
            cut << result.cut.members[i];
        }
        report.add("expansion-witness", cut.str());
    }
    if (a.bridges) {
        auto cut_edges = lsg::bridges(g);
        report.add("bridges", static_cast<std::int64_t>(cut_edges.size()));
        std::ostringstream list;
        for (std::size_t i = 0; i < cut_edges.size(); ++i) {
            if (i > 0)
                list << ' ';
            list << cut_edges[i].lo << '-' << cut_edges[i].hi;
        }
        if (!cut_edges.empty())
            report.add("bridge-list", list.str());
    }
    if (a.check_non_expanding) {
        lsg::BudgetFns fns{a.C};
        auto witness = lsg::check_non_expanding(
            g, [&fns](int t) { return fns.f(static_cast<double>(t)); }, a.non_expansion_cap);
        report.add("non-expanding", witness ? "FAIL" : "PASS");
        report.add("non-expanding-C", a.C);
        if (witness) {
            std::ostringstream h;
            for (int v : witness->subgraph_vertices.members)
                h << v << ' ';
            report.add("witness-subgraph", h.str());
            report.add("witness-ratio", witness->ratio.str());
            report.add("witness-bound", witness->bound);
        }
    }
    report.print_and_save(a.stats_out);
    return 0;
}

// ---------------------------------------------------------------- adversary

struct AdversaryArgs {
    std::string target;
    std::vector<int> bridge{1, 2};
    std::string alg = "local-spanner";
    int k = 1;
    std::uint64_t max_probes = 0;
    std::vector<int> edge;
    std::string report_path;
};

int cmd_adversary(const AdversaryArgs& a) {
    Report report("adversary");
    lsg::Graph g = lsg::load_ilg(a.target);
    add_digest(report, g, a.target);
    if (a.bridge.size() != 2)
        throw lsg::DomainError("--bridge takes two vertex ids");
    if (a.edge.size() != 2)
        throw lsg::DomainError("--edge takes two vertex ids");
    if (a.alg != "local-spanner")
        throw lsg::DomainError("unknown algorithm: " + a.alg);

    auto target = lsg::AdversaryTarget::create(std::move(g), lsg::EdgeKey(a.bridge[0], a.bridge[1]));
    report.add("girth", lsg::to_string(target.target_girth));
    report.add("bridge", std::to_string(target.bridge.lo) + " " + std::to_string(target.bridge.hi));
    lsg::EdgeKey edge(a.edge[0], a.edge[1]);
    report.add("edge", std::to_string(edge.lo) + " " + std::to_string(edge.hi));
    report.add("alg", a.alg);
    report.add("k", static_cast<std::int64_t>(a.k));

    lsg::EdgeAlgorithm alg = a.max_probes > 0 ? lsg::truncated_spanner_algorithm(a.k, a.max_probes)
                                              : lsg::spanner_algorithm(a.k);
    if (a.max_probes > 0)
        report.add("max-probes", a.max_probes);

    auto result = lsg::run_pipeline(alg, target, edge);
    report.add("answer", lsg::to_string(result.answer));
    report.add("probes", static_cast<std::int64_t>(result.transcript.entries.size()));
    report.add("forest-edges", static_cast<std::int64_t>(result.forest.forest_edges.size()));
    report.add("forest-components", static_cast<std::int64_t>(result.forest.components.size()));
    report.add("replay-ok", result.replay_ok ? "true" : "false");
    report.add("bridge-hit", result.embedding.bridge_hit ? "true" : "false");
    report.add("verdict", result.replay_ok && result.answer == lsg::Answer::Yes
                              ? "indistinguishable-accepts"
                              : "inconsistent");

    if (!a.report_path.empty()) {
        std::ostringstream out;
        out << report.finish();
        out << "transcript:\n" << lsg::serialize_transcript(result.transcript);
        out << "sigma:";
        for (int v = 1; v < static_cast<int>(result.embedding.sigma.size()); ++v)
            out << ' ' << result.embedding.sigma[v];
        out << '\n';
        out << "constraints:\n";
        for (const auto& [key, value] : result.embedding.order_constraints)
            out << key.first << ' ' << key.second << ' ' << value << '\n';
        write_file(a.report_path, out.str());
    }
    std::cout << report.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local sparse spanning graph toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a graph family into a .ilg file");
    cgen->add_option("--family", gen.family,
                     "path|cycle|grid|torus|complete|petersen|heawood|random-regular")
        ->required();
    cgen->add_option("--n", gen.n, "vertex count (path, cycle, complete, random-regular)");
    cgen->add_option("--rows", gen.rows, "rows (grid, torus)");
    cgen->add_option("--cols", gen.cols, "columns (grid, torus)");
    cgen->add_option("--degree", gen.degree, "degree (random-regular)");
    cgen->add_option("--seed", gen.seed, "random seed (random-regular)");
    cgen->add_option("--min-girth", gen.min_girth, "required girth (random-regular)");
    cgen->add_option("--out", gen.out, "output .ilg path")->required();

    TransformArgs tr;
    auto* ctr = app.add_subcommand("transform", "apply a graph construction");
    ctr->add_option("--in", tr.in, "input .ilg")->required();
    ctr->add_option("--out", tr.out, "output .ilg")->required();
    ctr->add_flag("--replacement-product", tr.replacement_product,
                  "replace vertices by cycle clouds");
    ctr->add_option("--cloud-map-out", tr.cloud_map_out, "write the cloud map here");
    ctr->add_option("--subdivide", tr.subdivide, "subdivide edge: u v")->expected(2);
    ctr->add_option("--bridge-join", tr.bridge_join, "join two subdivided copies: u1 v1 u2 v2")
        ->expected(4);

    SpanArgs sp;
    auto* csp = app.add_subcommand("span", "run the local spanner over every edge");
    csp->add_option("--in", sp.in, "input .ilg")->required();
    csp->add_option("--k", sp.k, "ball radius");
    csp->add_option("--epsilon", sp.epsilon, "sparsity slack (with --C)");
    csp->add_option("--C", sp.C, "non-expansion constant (with --epsilon)");
    csp->add_flag("--accept-theoretical-k", sp.accept_theoretical_k,
                  "allow the double-exponential formula for k");
    csp->add_flag("--all", sp.all, "decide every edge");
    csp->add_option("--jobs", sp.jobs, "parallel per-edge decisions");
    csp->add_option("--out", sp.out, "write per-edge decisions here");
    csp->add_option("--stats-out", sp.stats_out, "write the report here");

    EdgeArgs ed;
    auto* ced = app.add_subcommand("edge", "decide one edge");
    ced->add_option("--in", ed.in, "input .ilg")->required();
    ced->add_option("--k", ed.k, "ball radius")->required();
    ced->add_option("--edge", ed.edge, "edge: u v")->expected(2)->required();
    ced->add_option("--stats-out", ed.stats_out, "write the report here");

    DecomposeArgs de;
    auto* cde = app.add_subcommand("decompose", "remove balanced sparse cuts until components "
                                                "are small");
    cde->add_option("--in", de.in, "input .ilg")->required();
    cde->add_option("--k-stop", de.k_stop, "component size target")->required();
    cde->add_option("--C", de.C, "budget constant");
    cde->add_option("--cap", de.cap, "exhaustive cut cap");
    cde->add_flag("--exhaustive-only", de.exhaustive_only, "refuse sweep-cut fallbacks");
    cde->add_flag("--claim-non-expanding", de.claim_non_expanding,
                  "assert the removed-edge budget for f-non-expanding inputs");
    cde->add_option("--out", de.out, "write the decomposition here");
    cde->add_option("--stats-out", de.stats_out, "write the report here");

    AnalyzeArgs an;
    auto* can = app.add_subcommand("analyze", "run structural analyzers");
    can->add_option("--in", an.in, "input .ilg")->required();
    can->add_flag("--girth", an.girth, "shortest cycle length");
    can->add_flag("--expansion", an.expansion, "exact edge expansion (exhaustive)");
    can->add_flag("--bridges", an.bridges, "bridge edges");
    can->add_flag("--diameter", an.diameter, "graph diameter");
    can->add_flag("--components", an.components, "connected component count");
    can->add_flag("--check-non-expanding", an.check_non_expanding,
                  "verify f-non-expansion for f(x) = C/(log2 x (log2 log2 x)^2)");
    can->add_option("--C", an.C, "constant for --check-non-expanding");
    can->add_option("--expansion-cap", an.expansion_cap, "exhaustive cap for --expansion");
    can->add_option("--non-expansion-cap", an.non_expansion_cap,
                    "exhaustive cap for --check-non-expanding");
    can->add_option("--stats-out", an.stats_out, "write the report here");

    AdversaryArgs ad;
    auto* cad = app.add_subcommand("adversary", "record, embed and replay a per-edge algorithm "
                                                "against a bridged target");
    cad->add_option("--target", ad.target, "target .ilg (3-regular, bridged)")->required();
    cad->add_option("--bridge", ad.bridge, "bridge edge: u v")->expected(2);
    cad->add_option("--alg", ad.alg, "algorithm (local-spanner)");
    cad->add_option("--k", ad.k, "spanner radius");
    cad->add_option("--max-probes", ad.max_probes, "truncate the algorithm after this many probes");
    cad->add_option("--edge", ad.edge, "queried edge: u v")->expected(2)->required();
    cad->add_option("--report", ad.report_path, "write the full report here");

    try {
        app.parse(argc, argv);
        if (cgen->parsed())
            return cmd_gen(gen);
        if (ctr->parsed())
            return cmd_transform(tr);
        if (csp->parsed())
            return cmd_span(sp);
        if (ced->parsed())
            return cmd_edge(ed);
        if (cde->parsed())
            return cmd_decompose(de);
        if (can->parsed())
            return cmd_analyze(an);
        if (cad->parsed())
            return cmd_adversary(ad);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const lsg::ExhaustiveOnlyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lsg::OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lsg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
