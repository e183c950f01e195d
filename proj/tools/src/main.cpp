// vulnet: group vulnerability and power analysis on the command line
//
// JSON goes to stdout, one object per invocation; experiment commands emit
// headered CSV instead. Exit codes: 2 parse, 3 contract, 4 budget, 5 I/O.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "vulnet/generators.hpp"
#include "vulnet/graph.hpp"
#include "vulnet/ilp.hpp"
#include "vulnet/shapley.hpp"
#include "vulnet/spectral.hpp"
#include "vulnet/vulnerability.hpp"

using json = nlohmann::ordered_json;
using namespace vulnet;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

Budget budget_from_env() {
    Budget b;
    const char* s = std::getenv("VULNET_BUDGET");
    if (!s || !*s) return b;
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (errno != 0 || end == s || *end != '\0' || v == 0)
        throw contract_error("VULNET_BUDGET must be a positive integer");
    b.enumeration = v;
    b.bnb_nodes = v;
    return b;
}

// largest component when the input is disconnected, whole graph otherwise
struct Target {
    Graph graph;
    bool reduced = false;
    int total_nodes = 0;
    long long total_edges = 0;
    int component_count = 1;
};

Target pick_target(const Graph& g) {
    if (g.n() == 0 || is_connected(g)) return {g, false, g.n(), g.m(), 1};
    auto comps = connected_components(g);
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].graph.n() > comps[best].graph.n()) best = i;
    return {comps[best].graph, true, g.n(), g.m(), static_cast<int>(comps.size())};
}

json component_info(const Target& t) {
    json j;
    j["nodes"] = t.graph.n();
    j["edges"] = t.graph.m();
    j["total_nodes"] = t.total_nodes;
    j["total_edges"] = t.total_edges;
    j["components"] = t.component_count;
    return j;
}

json labels_json(const Graph& g, const NodeSet& s) {
    json arr = json::array();
    s.for_each([&](int i) { arr.push_back(g.label(i)); });
    return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    std::size_t n = a.size();
    if (n == 0) return 0.0;
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double cov = 0, va = 0, vb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    if (va == 0.0 || vb == 0.0) return 0.0;
    return cov / std::sqrt(va * vb);
}

std::vector<double> average_ranks(const std::vector<double>& v) {
    std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
    std::vector<double> rank(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = r;
        i = j + 1;
    }
    return rank;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    return pearson(average_ranks(a), average_ranks(b));
}

json vulnerability_json(const Graph& g, const VulnerabilityResult& r) {
    json j;
    j["nu_bar"] = r.nu_bar;
    j["nu_hat"] = r.nu_hat;
    j["optimal_set"] = labels_json(g, r.optimal_set);
    j["executioners"] = labels_json(g, r.executioners);
    j["method"] = method_name(r.method);
    if (r.lower_bound_only) j["lower_bound_only"] = true;
    return j;
}

// ---------------------------------------------------------------- commands

int cmd_classify(const std::string& path, bool all_components) {
    Graph g = load_edge_list_file(path);
    Timer t;
    json out;
    if (all_components) {
        auto cc = classify_componentwise(g);
        out["verdict"] = verdict_name(cc.combined);
        json comps = json::array();
        for (std::size_t i = 0; i < cc.components.size(); ++i) {
            const auto& comp = cc.components[i].graph;
            const auto& cls = cc.per_component[i];
            json cj;
            cj["nodes"] = comp.n();
            cj["edges"] = comp.m();
            cj["verdict"] = verdict_name(cls.verdict);
            cj["nu2"] = cls.nu2;
            if (cls.failing_node) cj["failing_node"] = comp.label(*cls.failing_node);
            comps.push_back(std::move(cj));
        }
        out["components"] = std::move(comps);
    } else {
        Target tgt = pick_target(g);
        auto cls = classify(tgt.graph);
        out["verdict"] = verdict_name(cls.verdict);
        out["nu2"] = cls.nu2;
        if (cls.failing_node) out["failing_node"] = tgt.graph.label(*cls.failing_node);
        out["method"] = cls.failing_node ? "per_node_two_cover" : "two_cover";
        if (tgt.reduced) out["component"] = component_info(tgt);
    }
    out["wall_time_sec"] = t.secs();
    emit(out);
    return 0;
}

int cmd_vulnerability(const std::string& path, const std::string& method, bool all_components) {
    Graph g = load_edge_list_file(path);
    Budget budget = budget_from_env();
    if (method == "ilp-export") {
        if (all_components) {
            export_lp(build_model(g), std::cout);
        } else {
            Target tgt = pick_target(g);
            export_lp(build_model(tgt.graph), std::cout);
        }
        return 0;
    }
    Timer t;
    json out;
    if (all_components) {
        auto cv = network_vulnerability_componentwise(g, budget);
        out = vulnerability_json(g, cv.combined);
        json comps = json::array();
        for (std::size_t i = 0; i < cv.components.size(); ++i) {
            json cj = vulnerability_json(cv.components[i].graph, cv.per_component[i]);
            cj["nodes"] = cv.components[i].graph.n();
            comps.push_back(std::move(cj));
        }
        out["components"] = std::move(comps);
    } else {
        Target tgt = pick_target(g);
        VulnerabilityResult r;
        if (method == "auto") {
            r = network_vulnerability(tgt.graph, budget);
        } else if (method == "two-cover") {
            auto cls = classify(tgt.graph);
            if (cls.verdict == Verdict::regularizable)
                throw contract_error(
                    "two-cover applies only when nu_bar >= 0; this graph is regularizable");
            r = compute_nonnegative(tgt.graph, cls);
        } else if (method == "binary-search") {
            r = compute_negative_binary_search(tgt.graph, budget);
        } else {
            r = compute_negative_bnb(tgt.graph, budget);
        }
        out = vulnerability_json(tgt.graph, r);
        if (tgt.reduced) out["component"] = component_info(tgt);
    }
    out["wall_time_sec"] = t.secs();
    emit(out);
    return 0;
}

int cmd_power(const std::string& path, const std::string& measure_str, bool csv) {
    Graph g = load_edge_list_file(path);
    Measure measure = measure_str == "p"   ? Measure::p
                      : measure_str == "q" ? Measure::q
                                           : Measure::v;
    Timer t;
    PowerVector pv = shapley_power(g, measure);
    if (csv) {
        std::cout << "node,power,power_exact\n";
        for (int i = 0; i < g.n(); ++i) {
            std::cout << csv_field(g.label(i)) << "," << std::setprecision(17)
                      << to_double(pv.score[i]) << "," << fraction_string(pv.score[i])
                      << "\n";
        }
        return 0;
    }
    json out;
    out["measure"] = measure_name(measure);
    json values = json::array();
    for (int i = 0; i < g.n(); ++i) {
        json v;
        v["node"] = g.label(i);
        v["power"] = to_double(pv.score[i]);
        v["exact"] = fraction_string(pv.score[i]);
        values.push_back(std::move(v));
    }
    out["values"] = std::move(values);
    out["wall_time_sec"] = t.secs();
    emit(out);
    return 0;
}

int cmd_lambda2(const std::string& path) {
    Graph g = load_edge_list_file(path);
    Timer t;
    auto r = algebraic_connectivity(g);
    json out;
    out["lambda2"] = r.lambda2;
    out["tolerance"] = r.tolerance;
    out["connected"] = r.connected;
    out["nodes"] = g.n();
    out["wall_time_sec"] = t.secs();
    emit(out);
    return 0;
}

int cmd_stats(const std::string& path, bool all_components) {
    Graph full = load_edge_list_file(path);
    Budget budget = budget_from_env();
    Timer t;
    json out;
    const Graph* g = nullptr;
    Target tgt;
    int vul = 0;
    if (all_components) {
        auto cv = network_vulnerability_componentwise(full, budget);
        vul = cv.combined.nu_bar;
        g = &full;
    } else {
        tgt = pick_target(full);
        vul = network_vulnerability(tgt.graph, budget).nu_bar;
        g = &tgt.graph;
    }
    PowerVector pv = shapley_power(*g, Measure::p);
    std::vector<double> deg(static_cast<std::size_t>(g->n()));
    std::vector<double> powv(static_cast<std::size_t>(g->n()));
    for (int i = 0; i < g->n(); ++i) {
        deg[static_cast<std::size_t>(i)] = g->degree(i);
        powv[static_cast<std::size_t>(i)] = to_double(pv.score[i]);
    }
    double maxpow = powv.empty() ? 0.0 : *std::max_element(powv.begin(), powv.end());
    double minpow = powv.empty() ? 0.0 : *std::min_element(powv.begin(), powv.end());
    std::map<int, std::pair<double, double>> by_degree; // degree -> (min,max)
    for (int i = 0; i < g->n(); ++i) {
        auto it = by_degree.find(g->degree(i));
        double x = powv[static_cast<std::size_t>(i)];
        if (it == by_degree.end())
            by_degree.emplace(g->degree(i), std::make_pair(x, x));
        else {
            it->second.first = std::min(it->second.first, x);
            it->second.second = std::max(it->second.second, x);
        }
    }
    double widest = 0.0;
    for (const auto& [d, mm] : by_degree) widest = std::max(widest, mm.second - mm.first);
    double global_range = maxpow - minpow;
    double maxdiff = global_range > 0.0 ? widest / global_range : 0.0;

    out["nodes"] = g->n();
    out["edges"] = g->m();
    out["vul"] = vul;
    out["maxdeg"] = g->n() > 0 ? max_degree(*g) : 0;
    out["maxpow"] = std::round(maxpow * 100.0) / 100.0;
    out["maxdiff"] = maxdiff;
    out["cor_pearson"] = pearson(deg, powv);
    out["cor_spearman"] = spearman(deg, powv);
    if (!all_components && tgt.reduced) out["component"] = component_info(tgt);
    if (all_components) out["components"] = connected_components(full).size();
    out["wall_time_sec"] = t.secs();
    emit(out);
    return 0;
}

// deterministic parallel map: worker results land in slots owned by sample id
template <typename F>
void parallel_samples(int count, int threads, F&& work) {
    if (threads < 1) threads = 1;
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    int i = next.fetch_add(1);
                    if (i >= count) return;
                    work(i);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

int cmd_sweep(int n, int kmin, int kmax, int samples, std::uint64_t seed, int threads) {
    if (kmin > kmax) throw contract_error("sweep needs kmin <= kmax");
    if (samples < 1) throw contract_error("sweep needs samples >= 1");
    std::cout << "mean_degree,samples,frac_quasi_regularizable,frac_regularizable,frac_vulnerable\n";
    for (int k = kmin; k <= kmax; ++k) {
        std::vector<Verdict> verdicts(static_cast<std::size_t>(samples));
        parallel_samples(samples, threads, [&](int s) {
            std::uint64_t stream =
                static_cast<std::uint64_t>(k - kmin) * static_cast<std::uint64_t>(samples) +
                static_cast<std::uint64_t>(s);
            Graph g = erdos_renyi_mean_degree(n, k, seed, stream);
            verdicts[static_cast<std::size_t>(s)] = classify_componentwise(g).combined;
        });
        int reg = 0, quasi_or_better = 0;
        for (Verdict v : verdicts) {
            if (v == Verdict::regularizable) ++reg;
            if (v != Verdict::vulnerable) ++quasi_or_better;
        }
        double inv = 1.0 / static_cast<double>(samples);
        std::cout << k << "," << samples << "," << std::setprecision(10)
                  << quasi_or_better * inv << "," << reg * inv << ","
                  << (samples - quasi_or_better) * inv << "\n";
    }
    return 0;
}

int cmd_scatter(const std::string& model, int n, int samples, std::uint64_t seed, int threads) {
    if (samples < 1) throw contract_error("scatter needs samples >= 1");
    if (n < 4) throw contract_error("scatter needs n >= 4");
    Budget budget = budget_from_env();
    struct Row {
        int nu_bar;
        double lambda2;
        bool exact;
    };
    std::vector<Row> rows(static_cast<std::size_t>(samples));
    int span = n / 2; // preferential attachment edges per step cycle through 1..n/2
    parallel_samples(samples, threads, [&](int s) {
        int m = 1 + s % span;
        Graph g;
        if (model == "ba") {
            g = barabasi_albert(n, m, seed, static_cast<std::uint64_t>(s));
        } else {
            double pairs = static_cast<double>(n) * (n - 1) / 2.0;
            double edges = static_cast<double>(m) * (m - 1) / 2.0 +
                           static_cast<double>(m) * (n - m);
            g = erdos_renyi(n, edges / pairs, seed, static_cast<std::uint64_t>(s));
        }
        auto cv = network_vulnerability_componentwise(g, budget);
        auto sp = algebraic_connectivity(g);
        rows[static_cast<std::size_t>(s)] = {cv.combined.nu_bar, sp.lambda2,
                                             !cv.combined.lower_bound_only};
    });
    std::cout << "id,nu_bar,lambda2\n";
    int inexact = 0;
    for (int s = 0; s < samples; ++s) {
        const Row& r = rows[static_cast<std::size_t>(s)];
        if (!r.exact) ++inexact;
        std::cout << s << "," << r.nu_bar << "," << std::setprecision(12) << r.lambda2
                  << "\n";
    }
    if (inexact > 0)
        std::cerr << "warning: " << inexact
                  << " sample(s) hit the search budget; their nu_bar is a lower bound\n";
    return 0;
}

int cmd_oracle(const std::string& path) {
    Graph g = load_edge_list_file(path);
    Timer t;
    auto r = oracle_nu_bar(g);
    json out = vulnerability_json(g, r);
    out["wall_time_sec"] = t.secs();
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"group vulnerability, regularizability and node power analysis"};
    app.require_subcommand(1);

    std::string path, method = "auto", measure = "p", model;
    bool all_components = false, csv = false;
    int n = 100, kmin = 1, kmax = 10, samples = 0, threads = default_threads();
    std::uint64_t seed = 0;

    auto* c_classify = app.add_subcommand("classify", "regularizability verdict");
    c_classify->add_option("file", path, "edge list file")->required();
    c_classify->add_flag("--all-components", all_components,
                         "classify every component and combine");

    auto* c_vul = app.add_subcommand("vulnerability", "network vulnerability nu_bar");
    c_vul->add_option("file", path, "edge list file")->required();
    c_vul->add_option("--method", method, "auto|two-cover|binary-search|bnb|ilp-export")
        ->check(CLI::IsMember({"auto", "two-cover", "binary-search", "bnb", "ilp-export"}));
    c_vul->add_flag("--all-components", all_components, "apply the componentwise rule");

    auto* c_power = app.add_subcommand("power", "Shapley node power");
    c_power->add_option("file", path, "edge list file")->required();
    c_power->add_option("--measure", measure, "p|q|v")->check(CLI::IsMember({"p", "q", "v"}));
    c_power->add_flag("--csv", csv, "CSV instead of JSON");

    auto* c_lambda2 = app.add_subcommand("lambda2", "algebraic connectivity");
    c_lambda2->add_option("file", path, "edge list file")->required();

    auto* c_stats = app.add_subcommand("stats", "summary row: size, vulnerability, power");
    c_stats->add_option("file", path, "edge list file")->required();
    c_stats->add_flag("--all-components", all_components, "apply the componentwise rule");

    auto* c_sweep = app.add_subcommand("sweep", "ER classification sweep over mean degree");
    c_sweep->add_option("--model", model, "random graph model")
        ->check(CLI::IsMember({"er"}))
        ->required();
    c_sweep->add_option("--n", n, "nodes per sample");
    c_sweep->add_option("--kmin", kmin, "lowest mean degree");
    c_sweep->add_option("--kmax", kmax, "highest mean degree");
    c_sweep->add_option("--samples", samples, "graphs per mean degree")->default_val(500);
    c_sweep->add_option("--seed", seed, "rng seed")->required();
    c_sweep->add_option("--threads", threads, "worker threads");

    auto* c_scatter = app.add_subcommand("scatter", "vulnerability vs lambda2 samples");
    c_scatter->add_option("--model", model, "random graph model")
        ->check(CLI::IsMember({"ba", "er"}))
        ->required();
    c_scatter->add_option("--n", n, "nodes per sample");
    c_scatter->add_option("--samples", samples, "number of graphs")->default_val(200);
    c_scatter->add_option("--seed", seed, "rng seed")->required();
    c_scatter->add_option("--threads", threads, "worker threads");

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive ground truth (n <= 20)");
    c_oracle->add_option("file", path, "edge list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(path, all_components);
        if (c_vul->parsed()) return cmd_vulnerability(path, method, all_components);
        if (c_power->parsed()) return cmd_power(path, measure, csv);
        if (c_lambda2->parsed()) return cmd_lambda2(path);
        if (c_stats->parsed()) return cmd_stats(path, all_components);
        if (c_sweep->parsed()) return cmd_sweep(n, kmin, kmax, samples, seed, threads);
        if (c_scatter->parsed()) return cmd_scatter(model, n, samples, seed, threads);
        if (c_oracle->parsed()) return cmd_oracle(path);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const contract_error& e) {
        std::cerr << "contract error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
