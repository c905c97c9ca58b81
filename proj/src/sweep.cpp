#include "minors/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "minors/patterns.hpp"
#include "minors/width.hpp"

namespace minors {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Fisher-Yates with the raw engine, so sequences do not depend on the
// standard library's distribution internals.
void shuffle_vec(std::vector<int>& v, std::mt19937& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

std::mt19937 row_rng(unsigned seed, int param, int rep) {
    std::seed_seq seq{seed, static_cast<unsigned>(param), static_cast<unsigned>(rep)};
    return std::mt19937(seq);
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    shuffle_vec(p, rng);
    return p;
}

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool monotone_ok(const std::vector<int>& seq, const MonotoneWitness& run, int target) {
    if (static_cast<int>(run.indices.size()) != target) return false;
    for (std::size_t i = 0; i < run.indices.size(); ++i) {
        int idx = run.indices[i];
        if (idx < 0 || idx >= static_cast<int>(seq.size())) return false;
        if (i > 0) {
            if (idx <= run.indices[i - 1]) return false;
            bool ok = run.direction == RunDirection::increasing
                          ? seq[run.indices[i - 1]] < seq[idx]
                          : seq[run.indices[i - 1]] > seq[idx];
            if (!ok) return false;
        }
    }
    return true;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

bool SweepReport::any_violation() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const SweepRow& r) { return r.outcome == "violated"; });
}

Graph random_tree(int n, std::mt19937& rng) {
    require(n >= 1, "tree needs at least one vertex");
    if (n == 1) return Graph::make(1, {});
    if (n == 2) return Graph::make(2, {{0, 1}});
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = static_cast<int>(rng() % n);
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<Edge> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(make_edge(leaf, x));
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back(make_edge(a, b));
    return Graph::make(n, edges);
}

Graph random_pw2_graph(int n, std::mt19937& rng) {
    require(n >= 1, "graph needs at least one vertex");
    for (int attempt = 0; attempt < 300; ++attempt) {
        Graph t = random_tree(n, rng);
        auto edges = t.edges();
        int extra = static_cast<int>(rng() % (n / 2 + 1));
        for (int i = 0; i < extra; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v) edges.push_back(make_edge(u, v));
        }
        Graph g = Graph::make(n, edges);
        if (exact_pathwidth_value(g) <= 2) return g;
    }
    return path_graph(n);
}

SweepReport run_sweep(const SweepSpec& spec) {
    const auto& fam = spec.family;
    require(fam == "wheel" || fam == "double_wheel" || fam == "pw2" || fam == "xi" ||
                fam == "yurt" || fam == "es",
            "unknown sweep family: " + fam);
    require(spec.param_min <= spec.param_max, "empty parameter range");
    require(spec.repeats >= 0, "repeats must be nonnegative");
    require(spec.repeats > 0 || fam == "es", "repeats = 0 (exhaustive) is only supported for es");
    if (fam == "wheel") require(spec.param_min > 2, "wheel sweep needs h > 2");
    if (fam == "wheel") require(spec.param_max <= 12, "wheel sweep capped at h = 12");
    if (fam == "double_wheel")
        require(spec.param_min >= 12 && spec.param_max <= 18,
                "double_wheel sweep supports h in 12..18 (the promised order drops below 3 earlier)");
    if (fam == "pw2") require(spec.param_min >= 3 && spec.param_max <= 14, "pw2 sweep supports n in 3..14");
    if (fam == "xi") require(spec.param_min >= 2 && spec.param_max <= 8, "xi sweep supports k in 2..8");
    if (fam == "yurt") require(spec.param_min >= 1 && spec.param_max <= 8, "yurt sweep supports k in 1..8");
    if (fam == "es") {
        require(spec.param_min >= 1 && spec.param_max <= 1000, "es sweep supports lengths 1..1000");
        if (spec.repeats == 0)
            require(spec.param_max <= 8, "exhaustive es sweep capped at length 8");
    }

    SweepReport report;
    auto push = [&](const std::string& params, long long started, const std::string& outcome,
                    int achieved, int promised, const std::string& witness) {
        SweepRow row;
        row.params = params;
        row.wall_ms = now_ms() - started;
        if (spec.budget_ms > 0 && row.wall_ms > spec.budget_ms) {
            row.outcome = "unknown";
            row.witness = "budget exceeded";
        } else {
            row.outcome = outcome;
            row.order_achieved = achieved;
            row.order_promised = promised;
            row.witness = witness;
        }
        report.rows.push_back(std::move(row));
    };
    auto attempt = [&](const std::string& params, auto&& body) {
        long long started = now_ms();
        try {
            auto [achieved, promised] = body();
            push(params, started, "verified", achieved, promised, "");
        } catch (const std::logic_error& e) {
            push(params, started, "violated", 0, 0, e.what());
        }
    };

    for (int param = spec.param_min; param <= spec.param_max; ++param) {
        if (fam == "es" && spec.repeats == 0) {
            int n = param;
            int k = spec.k > 0 ? spec.k : ceil_sqrt(n);
            require(static_cast<long long>(k - 1) * (k - 1) + 1 <= n,
                    "es target k too large for length " + std::to_string(n));
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            long long idx = 0;
            do {
                std::ostringstream params;
                params << "family=es;n=" << n << ";k=" << k << ";idx=" << idx;
                attempt(params.str(), [&]() -> std::pair<int, int> {
                    auto run = es_extract(perm, k, k);
                    if (!monotone_ok(perm, run, k)) throw std::logic_error("witness is not a monotone run");
                    return {k, k};
                });
                ++idx;
            } while (std::next_permutation(perm.begin(), perm.end()));
            continue;
        }
        for (int rep = 0; rep < spec.repeats; ++rep) {
            auto rng = row_rng(spec.seed, param, rep);
            std::ostringstream params;
            if (fam == "wheel") {
                params << "family=wheel;h=" << param << ";rep=" << rep;
                attempt(params.str(), [&]() -> std::pair<int, int> {
                    auto psi = random_permutation(1 << param, rng);
                    auto out = wheel_from_tree_path(param, psi);
                    return {out.order, out.order_promised};
                });
            } else if (fam == "double_wheel") {
                params << "family=double_wheel;h=" << param << ";rep=" << rep;
                attempt(params.str(), [&]() -> std::pair<int, int> {
                    int h = param;
                    Graph tree = complete_binary_tree(h);
                    int leaf_count = 1 << h;
                    std::vector<int> leaves(leaf_count);
                    std::iota(leaves.begin(), leaves.end(), leaf_count - 1);
                    shuffle_vec(leaves, rng);
                    auto inst = lambda_build(tree, leaf_count, leaves);
                    auto out = double_wheel_from_lambda(inst);
                    return {out.order, out.order_promised};
                });
            } else if (fam == "pw2") {
                params << "family=pw2;n=" << param << ";rep=" << rep;
                attempt(params.str(), [&]() -> std::pair<int, int> {
                    Graph g = random_pw2_graph(param, rng);
                    embed_pw2_in_xi(g);
                    return {param, param};
                });
            } else if (fam == "xi") {
                params << "family=xi;k=" << param << ";rep=" << rep;
                attempt(params.str(), [&]() -> std::pair<int, int> {
                    int len = (param - 1) * (param - 1) + 1;
                    auto perm = random_permutation(len, rng);
                    xi_from_double_path(param, len, perm);
                    return {param, param};
                });
            } else if (fam == "yurt") {
                params << "family=yurt;k=" << param << ";rep=" << rep;
                attempt(params.str(), [&]() -> std::pair<int, int> {
                    int l = std::max((param - 1) * (param - 1) + 1, 2);
                    std::vector<int> teeth(l);
                    std::iota(teeth.begin(), teeth.end(), l);
                    shuffle_vec(teeth, rng);
                    auto inst = lambda_build(comb(l), l, teeth);
                    yurt_from_lambda_comb(inst, param);
                    return {param, param};
                });
            } else {  // es, random repeats
                int n = param;
                int k = spec.k > 0 ? spec.k : ceil_sqrt(n);
                require(static_cast<long long>(k - 1) * (k - 1) + 1 <= n,
                        "es target k too large for length " + std::to_string(n));
                params << "family=es;n=" << n << ";k=" << k << ";rep=" << rep;
                attempt(params.str(), [&]() -> std::pair<int, int> {
                    auto perm = random_permutation(n, rng);
                    auto run = es_extract(perm, k, k);
                    if (!monotone_ok(perm, run, k)) throw std::logic_error("witness is not a monotone run");
                    return {k, k};
                });
            }
        }
    }
    return report;
}

std::string sweep_to_csv(const SweepReport& report, bool timings) {
    std::ostringstream out;
    out << "params,outcome,order_achieved,order_promised,witness";
    if (timings) out << ",wall_ms";
    out << "\n";
    for (const auto& r : report.rows) {
        out << csv_quote(r.params) << ',' << r.outcome << ',' << r.order_achieved << ','
            << r.order_promised << ',' << csv_quote(r.witness);
        if (timings) out << ',' << r.wall_ms;
        out << "\n";
    }
    return out.str();
}

std::string sweep_to_json(const SweepReport& report, bool timings) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row;
        row["params"] = r.params;
        row["outcome"] = r.outcome;
        row["order_achieved"] = r.order_achieved;
        row["order_promised"] = r.order_promised;
        row["witness"] = r.witness;
        if (timings) row["wall_ms"] = r.wall_ms;
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

CrossCheckReport cross_check(BoundFamily family, int k, const Graph& host, long long budget_ms) {
    CrossCheckReport out;
    out.k = k;
    Graph pattern;
    switch (family) {
        case BoundFamily::wheel:
            out.family = "wheel";
            pattern = wheel(k);
            break;
        case BoundFamily::double_wheel:
            out.family = "double_wheel";
            pattern = double_wheel(k);
            break;
        case BoundFamily::pw2:
            out.family = "pw2";
            pattern = cycle_graph(k);  // representative pattern of pathwidth 2
            break;
        case BoundFamily::yurt:
            out.family = "yurt";
            pattern = yurt(k);
            break;
    }
    out.bound_value = bound(family, k);
    out.treewidth = exact_treewidth_value(host);
    MinorSearchOptions opts;
    opts.budget_ms = budget_ms;
    out.minor = is_minor(pattern, host, opts).outcome;
    out.vacuous = out.treewidth < out.bound_value;
    // A bound below the pattern's own treewidth makes the implication void:
    // hosts below tw(pattern) can clear the threshold while provably lacking
    // the minor (the small-k formulas degenerate, e.g. pw2 at k = 3 gives -1).
    out.applicable = out.bound_value >= exact_treewidth_value(pattern);
    out.consistent =
        !(out.applicable && out.treewidth >= out.bound_value && out.minor == SearchOutcome::absent);
    return out;
}

}  // namespace minors
