// Command-line front end: generators, exact solvers, verifiers, the
// constructive lemmas and the sweep harness behind one binary.
//
// Exit codes: 0 ok or unknown, 1 verified violation, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minors/constructions.hpp"
#include "minors/graph_io.hpp"
#include "minors/linked.hpp"
#include "minors/minor_search.hpp"
#include "minors/model.hpp"
#include "minors/patterns.hpp"
#include "minors/separation.hpp"
#include "minors/sweep.hpp"
#include "minors/width.hpp"

using namespace minors;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string format = "graph6";
    unsigned seed = 0;
    long long budget_ms = 0;
    std::string out;
};

GraphFormat parse_format(const std::string& name) {
    if (name == "graph6") return GraphFormat::graph6;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "json") return GraphFormat::json;
    throw CLI::ValidationError("--format", "unknown format: " + name);
}

Graph load_graph(const std::string& path, const GlobalOpts& g) {
    if (path == "-") return read_graph(std::cin, parse_format(g.format));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_graph(in, parse_format(g.format));
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(g.out);
    if (!out) throw std::invalid_argument("cannot write " + g.out);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::vector<int> shuffled(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
    return p;
}

const char* outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::absent: return "absent";
        case SearchOutcome::unknown: return "unknown";
    }
    return "unknown";
}

const char* linked_name(LinkedOutcome o) {
    switch (o) {
        case LinkedOutcome::linked: return "linked";
        case LinkedOutcome::not_linked: return "not_linked";
        case LinkedOutcome::unknown: return "unknown";
    }
    return "unknown";
}

Graph generate(const std::string& family, int n) {
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "complete") return complete_graph(n);
    if (family == "grid2") return grid_2xk(n);
    if (family == "wheel") return wheel(n);
    if (family == "double_wheel") return double_wheel(n);
    if (family == "xi") return xi(n);
    if (family == "yurt") return yurt(n);
    if (family == "comb") return comb(n);
    if (family == "btree") return complete_binary_tree(n);
    throw std::invalid_argument("unknown generator family: " + family);
}

json decomposition_json(const PathDecomposition& d) {
    return json::parse(decomposition_to_json(d));
}

json tree_decomposition_json(const TreeDecomposition& d) {
    json bags = json::array();
    for (const auto& [node, bag] : d.bags) bags.push_back({{"node", node}, {"bag", bag}});
    json edges = json::array();
    for (const auto& [u, v] : d.shape.edges()) edges.push_back({u, v});
    return {{"shape_edges", edges}, {"bags", bags}};
}

json model_json(const MinorModel& m) { return json::parse(model_to_json(m)); }

json graph_json(const Graph& g) { return json::parse(to_json(g)); }

int report_violations(const GlobalOpts& g, const std::vector<std::string>& violations) {
    json out = {{"ok", violations.empty()}, {"violations", violations}};
    emit(g, out.dump(2));
    return violations.empty() ? 0 : 1;
}

int run_embed(const GlobalOpts& g, const std::string& lemma, int h, int k, int p_len, int l,
              const std::string& graph_file) {
    std::mt19937 rng(g.seed);
    json out;
    if (lemma == "wheel") {
        auto psi = shuffled(1 << h, rng);
        auto res = wheel_from_tree_path(h, psi);
        out = {{"host", graph_json(res.host)},     {"pattern", graph_json(res.pattern)},
               {"model", model_json(res.model)},   {"order", res.order},
               {"order_promised", res.order_promised}, {"lca_is_root", res.lca_is_root}};
    } else if (lemma == "double_wheel") {
        Graph tree = complete_binary_tree(h);
        auto leaves = tree_metrics(tree).leaves;
        auto inst = lambda_build(tree, static_cast<int>(leaves.size()), leaves);
        auto res = double_wheel_from_lambda(inst);
        out = {{"host", graph_json(inst.flat)},
               {"pattern", graph_json(res.pattern)},
               {"model", model_json(res.model)},
               {"order", res.order},
               {"order_promised", res.order_promised}};
    } else if (lemma == "pw2") {
        if (graph_file.empty()) throw std::invalid_argument("pw2 embedding needs a graph file");
        Graph host_input = load_graph(graph_file, g);
        auto res = embed_pw2_in_xi(host_input);
        out = {{"host", graph_json(res.host)},
               {"padded", graph_json(res.padded)},
               {"model", model_json(res.model)}};
    } else if (lemma == "xi") {
        int len = p_len > 0 ? p_len : (k - 1) * (k - 1) + 1;
        auto perm = shuffled(len, rng);
        auto res = xi_from_double_path(k, len, perm);
        out = {{"host", graph_json(res.host)},
               {"pattern", graph_json(res.pattern)},
               {"model", model_json(res.model)}};
    } else if (lemma == "yurt") {
        int teeth = l > 0 ? l : std::max((k - 1) * (k - 1) + 1, 2);
        Graph tree = comb(teeth);
        std::vector<int> matched;
        for (int i : shuffled(teeth, rng)) matched.push_back(teeth + i);
        auto inst = lambda_build(tree, teeth, matched);
        auto res = yurt_from_lambda_comb(inst, k);
        out = {{"host", graph_json(inst.flat)},
               {"pattern", graph_json(res.pattern)},
               {"model", model_json(res.model)}};
    } else {
        throw std::invalid_argument("unknown lemma: " + lemma);
    }
    emit(g, out.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-minors toolkit: generators, exact width solvers, minor search,\n"
                 "certificate verifiers and the constructive embedding lemmas"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "graph I/O format: graph6, dimacs or json")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for any randomized choice")->capture_default_str();
    app.add_option("--budget-ms", g.budget_ms, "time budget per expensive query (0 = none)");
    app.add_option("--out", g.out, "write output to this file instead of stdout");

    // gen
    std::string gen_family;
    int gen_n = 0;
    auto* gen = app.add_subcommand("gen", "generate a named graph");
    gen->add_option("family", gen_family,
                    "path | cycle | complete | grid2 | wheel | double_wheel | xi | yurt | comb | btree")
        ->required();
    gen->add_option("n", gen_n, "order parameter")->required();

    // tw / pw
    std::string tw_file, pw_file;
    auto* tw = app.add_subcommand("tw", "exact treewidth with witness");
    tw->add_option("graph", tw_file, "graph file, - for stdin")->required();
    auto* pw = app.add_subcommand("pw", "exact pathwidth with witness");
    pw->add_option("graph", pw_file, "graph file, - for stdin")->required();

    // minor
    std::string minor_pattern, minor_host;
    auto* minor = app.add_subcommand("minor", "minor containment search");
    minor->add_option("pattern", minor_pattern, "pattern graph file")->required();
    minor->add_option("host", minor_host, "host graph file")->required();

    // linked
    std::string linked_file;
    std::vector<int> linked_set;
    auto* linked = app.add_subcommand("linked", "linkedness oracle for a vertex set");
    linked->add_option("graph", linked_file, "graph file")->required();
    linked->add_option("--set", linked_set, "vertex ids of the candidate linked set")->required();

    // verify-model
    std::string vm_host, vm_pattern, vm_model;
    auto* vmodel = app.add_subcommand("verify-model", "check a minor model");
    vmodel->add_option("host", vm_host, "host graph file")->required();
    vmodel->add_option("pattern", vm_pattern, "pattern graph file")->required();
    vmodel->add_option("model", vm_model, "model JSON file")->required();

    // verify-cert
    std::string vc_host, vc_cert;
    bool vc_linked = false;
    auto* vcert = app.add_subcommand("verify-cert", "check a separation certificate");
    vcert->add_option("host", vc_host, "host graph file")->required();
    vcert->add_option("certificate", vc_cert, "certificate JSON file")->required();
    vcert->add_flag("--linkedness", vc_linked, "also run the linkedness oracle on the separator");

    // verify-decomp
    std::string vd_graph, vd_decomp;
    auto* vdecomp = app.add_subcommand("verify-decomp", "check a path decomposition");
    vdecomp->add_option("graph", vd_graph, "graph file")->required();
    vdecomp->add_option("decomposition", vd_decomp, "decomposition JSON file")->required();

    // compactify
    std::string cf_graph, cf_decomp;
    auto* cf = app.add_subcommand("compactify", "compact form of an optimal path decomposition");
    cf->add_option("graph", cf_graph, "graph file")->required();
    cf->add_option("decomposition", cf_decomp, "optimal decomposition JSON (computed when omitted)");

    // embed
    std::string em_lemma, em_graph;
    int em_h = 3, em_k = 2, em_plen = 0, em_l = 0;
    auto* em = app.add_subcommand("embed", "run a constructive lemma, emitting {host, model} JSON");
    em->add_option("lemma", em_lemma, "wheel | double_wheel | pw2 | xi | yurt")->required();
    em->add_option("--height", em_h, "tree height (wheel, double_wheel)");
    em->add_option("--k", em_k, "target order (xi, yurt)");
    em->add_option("--p-len", em_plen, "path length override (xi)");
    em->add_option("--teeth", em_l, "comb size override (yurt)");
    em->add_option("--graph", em_graph, "input graph file (pw2)");

    // bound
    std::string bd_family;
    int bd_k = 0;
    auto* bd = app.add_subcommand("bound", "treewidth threshold of a family at order k");
    bd->add_option("family", bd_family, "wheel | double_wheel | pw2 | yurt")->required();
    bd->add_option("k", bd_k, "pattern order")->required();

    // sweep
    SweepSpec sweep_spec;
    auto* sw = app.add_subcommand("sweep", "batch construction sweep with a CSV/JSON report");
    sw->add_option("--family", sweep_spec.family,
                   "wheel | double_wheel | pw2 | xi | yurt | es")
        ->required();
    sw->add_option("--min", sweep_spec.param_min, "first parameter value")->required();
    sw->add_option("--max", sweep_spec.param_max, "last parameter value")->required();
    sw->add_option("--repeats", sweep_spec.repeats, "seeded repeats per point (es: 0 = exhaustive)")
        ->capture_default_str();
    sw->add_option("--k", sweep_spec.k, "run length target (es only)");
    bool sw_timings = false;
    sw->add_flag("--timings", sw_timings, "include wall_ms (breaks byte determinism)");

    // cross-check
    std::string cc_family, cc_host;
    int cc_k = 0;
    auto* cc = app.add_subcommand("cross-check", "test the excluded-minor implication on one host");
    cc->add_option("family", cc_family, "wheel | double_wheel | pw2 | yurt")->required();
    cc->add_option("k", cc_k, "pattern order")->required();
    cc->add_option("host", cc_host, "host graph file")->required();

    // accept the global flags after the subcommand too
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            emit(g, write_graph(generate(gen_family, gen_n), parse_format(g.format)));
            return 0;
        }
        if (tw->parsed()) {
            auto res = exact_treewidth(load_graph(tw_file, g));
            json out = {{"treewidth", res.width}, {"witness", tree_decomposition_json(res.witness)}};
            emit(g, out.dump(2));
            return 0;
        }
        if (pw->parsed()) {
            auto res = exact_pathwidth(load_graph(pw_file, g));
            json out = {{"pathwidth", res.width}, {"witness", decomposition_json(res.witness)}};
            emit(g, out.dump(2));
            return 0;
        }
        if (minor->parsed()) {
            MinorSearchOptions opts;
            opts.budget_ms = g.budget_ms;
            auto res = is_minor(load_graph(minor_pattern, g), load_graph(minor_host, g), opts);
            json out = {{"outcome", outcome_name(res.outcome)}};
            if (res.model) out["model"] = model_json(*res.model);
            emit(g, out.dump(2));
            return 0;
        }
        if (linked->parsed()) {
            LinkedOptions opts;
            opts.budget_ms = g.budget_ms;
            opts.seed = g.seed;
            auto res = is_linked(load_graph(linked_file, g), linked_set, opts);
            json out = {{"outcome", linked_name(res.outcome)}};
            if (res.failing) out["failing_pair"] = {res.failing->first, res.failing->second};
            emit(g, out.dump(2));
            return 0;
        }
        if (vmodel->parsed()) {
            Graph host = load_graph(vm_host, g);
            Graph pattern = load_graph(vm_pattern, g);
            auto model = model_from_json(slurp(vm_model));
            return report_violations(g, verify_model(host, pattern, model));
        }
        if (vcert->parsed()) {
            Graph host = load_graph(vc_host, g);
            auto cert = certificate_from_json(slurp(vc_cert));
            CertificateCheckOptions opts;
            opts.check_linkedness = vc_linked;
            opts.linked.budget_ms = g.budget_ms;
            auto report = verify_separation_certificate(host, cert, opts);
            json out = {{"ok", report.ok()},
                        {"violations", report.violations},
                        {"linkedness", linked_name(report.linkedness)}};
            emit(g, out.dump(2));
            return report.ok() && report.linkedness != LinkedOutcome::not_linked ? 0 : 1;
        }
        if (vdecomp->parsed()) {
            Graph graph = load_graph(vd_graph, g);
            auto d = path_decomposition_from_json(slurp(vd_decomp));
            return report_violations(g, verify_decomposition(graph, d));
        }
        if (cf->parsed()) {
            Graph graph = load_graph(cf_graph, g);
            PathDecomposition d = cf_decomp.empty() ? exact_pathwidth(graph).witness
                                                    : path_decomposition_from_json(slurp(cf_decomp));
            emit(g, decomposition_to_json(compactify(graph, d)));
            return 0;
        }
        if (em->parsed()) return run_embed(g, em_lemma, em_h, em_k, em_plen, em_l, em_graph);
        if (bd->parsed()) {
            emit(g, std::to_string(bound(bound_family_from_name(bd_family), bd_k)));
            return 0;
        }
        if (sw->parsed()) {
            sweep_spec.seed = g.seed;
            sweep_spec.budget_ms = g.budget_ms;
            sweep_spec.timings = sw_timings;
            auto report = run_sweep(sweep_spec);
            emit(g, g.format == "json" ? sweep_to_json(report, sw_timings)
                                       : sweep_to_csv(report, sw_timings));
            return report.any_violation() ? 1 : 0;
        }
        if (cc->parsed()) {
            auto res = cross_check(bound_family_from_name(cc_family), cc_k, load_graph(cc_host, g),
                                   g.budget_ms);
            json out = {{"family", res.family},
                        {"k", res.k},
                        {"treewidth", res.treewidth},
                        {"bound", res.bound_value},
                        {"minor", outcome_name(res.minor)},
                        {"vacuous", res.vacuous},
                        {"applicable", res.applicable},
                        {"consistent", res.consistent}};
            emit(g, out.dump(2));
            return res.consistent ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
