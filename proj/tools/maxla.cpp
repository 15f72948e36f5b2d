// Command line front end: exact and constructive maximum linear arrangement
// solvers, the brute-force reference, tree corpus generation, experiment
// tables, and randomized self-verification suites.
//
// Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage or
// input errors. All randomness is seed-controlled; outputs are byte-stable
// for fixed inputs, flags, and seeds.

#include "CLI11.hpp"

#include "maxla/arrangement.hpp"
#include "maxla/bnb.hpp"
#include "maxla/experiments.hpp"
#include "maxla/free_tree.hpp"
#include "maxla/graph.hpp"
#include "maxla/oracle.hpp"
#include "maxla/solvers.hpp"
#include "maxla/treegen.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

maxla::graph read_graph(const std::string& path) {
    if (path.empty() || path == "-")
        return maxla::parse_edge_list(std::cin);
    return maxla::load_edge_list(path);
}

int default_threads() {
    if (const char* env = std::getenv("MAXLA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 0; // resolved to hardware concurrency by the solvers
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(text);
            return {n, n};
        }
        int from = std::stoi(text.substr(0, dots));
        int to = std::stoi(text.substr(dots + 2));
        if (from > to)
            throw usage_error("empty range: " + text);
        return {from, to};
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("expected N or A..B, got: " + text);
    }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw usage_error("cannot open output file: " + path);
    return file;
}

bool is_cycle(const maxla::graph& g) {
    if (g.num_vertices() < 3 || g.num_edges() != g.num_vertices())
        return false;
    for (int u = 0; u < g.num_vertices(); ++u)
        if (g.degree(u) != 2)
            return false;
    return g.is_connected();
}

// --- solve ------------------------------------------------------------

int run_solve(const std::string& input, bool fast, int threads) {
    maxla::graph g = read_graph(input);
    maxla::solve_result r;
    if (is_cycle(g)) {
        r.value = maxla::dmax_cycle(g.num_vertices());
        r.witness = maxla::cycle_witness(g.num_vertices());
        r.method = maxla::solve_method::closed_form;
    } else if (g.is_tree()) {
        maxla::free_tree t(std::move(g));
        r = maxla::solve(t, fast ? maxla::solve_mode::fast : maxla::solve_mode::exact,
                         threads);
    } else {
        throw usage_error("input must be a tree or a cycle");
    }
    std::cout << r.value << '\n'
              << maxla::format_arrangement(r.witness) << '\n'
              << maxla::method_name(r.method) << (r.exact ? "" : " (lower bound)")
              << '\n';
    return exit_ok;
}

// --- oracle -----------------------------------------------------------

int run_oracle(const std::string& input, const std::string& restrict_name,
               int k_thistles) {
    maxla::graph g = read_graph(input);
    if (g.num_vertices() > 12)
        throw usage_error("brute force is limited to 12 vertices");

    std::optional<maxla::oracle_result> r;
    if (restrict_name == "bipartite")
        r = maxla::brute_restricted(g, maxla::bipartite_only());
    else if (restrict_name == "k-thistles")
        r = maxla::brute_restricted(g, maxla::exactly_k_thistles(k_thistles));
    else
        r = maxla::brute_maxla(g);

    if (!r) {
        std::cout << "infeasible\n";
        return exit_ok;
    }
    std::cout << r->value << '\n'
              << maxla::format_arrangement(r->witnesses.front()) << '\n'
              << "maxima=" << r->maxima_count
              << " bipartite=" << (r->has_bipartite_maximum ? "yes" : "no")
              << " nonbipartite=" << (r->has_nonbipartite_maximum ? "yes" : "no")
              << " min-thistles=" << r->min_thistles << '\n';
    return exit_ok;
}

// --- classify ---------------------------------------------------------

int run_classify(const std::string& input) {
    maxla::graph g = read_graph(input);
    if (!g.is_tree())
        throw usage_error("classify expects a tree");
    maxla::free_tree t(std::move(g));
    auto cls = maxla::classify(t);
    auto phi = maxla::potential_thistles(t);

    std::cout << "shape=" << maxla::shape_name(cls.shape);
    switch (cls.shape) {
    case maxla::tree_shape::balanced_bistar:
    case maxla::tree_shape::bistar:
        std::cout << " d1=" << cls.d1 << " d2=" << cls.d2;
        break;
    case maxla::tree_shape::quasistar:
        std::cout << " k=" << cls.k << " l=" << cls.l;
        break;
    case maxla::tree_shape::two_linear:
        std::cout << " bridge=" << cls.bridge_length;
        break;
    case maxla::tree_shape::k_linear:
        std::cout << " hubs=" << cls.k;
        break;
    default:
        break;
    }
    std::cout << " phi=" << phi.phi << '\n';
    return exit_ok;
}

// --- enumerate / sample -----------------------------------------------

int run_enumerate(int n, const std::string& output, bool count_only) {
    if (n < 1)
        throw usage_error("--n must be at least 1");
    if (count_only) {
        std::cout << maxla::count_free_trees(n) << '\n';
        return exit_ok;
    }
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    maxla::enumerate_free_trees(
        n, [&](const maxla::free_tree& t) { out << maxla::format_tree_line(t) << '\n'; });
    return exit_ok;
}

int run_sample(int n, std::int64_t count, std::uint64_t seed, const std::string& output) {
    if (n < 1)
        throw usage_error("--n must be at least 1");
    if (count < 1)
        throw usage_error("--count must be at least 1");
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    std::mt19937_64 rng(seed);
    maxla::rooted_tree_counts counts(n);
    for (std::int64_t i = 0; i < count; ++i)
        out << maxla::format_tree_line(maxla::sample_free_tree(n, rng, counts)) << '\n';
    return exit_ok;
}

// --- stats ------------------------------------------------------------

std::string emit_distributions(const std::vector<maxla::distribution_record>& rows) {
    // gnuplot-ready: one block per n, blank-line separated.
    std::ostringstream out;
    out << "# n\tkey\tcount\n";
    for (const auto& r : rows) {
        out << "# n=" << r.n << " trees=" << r.trees;
        if (r.metric == maxla::tree_metric::ratio ||
            r.metric == maxla::tree_metric::multi_thistle_gap) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.6f", r.max_ratio);
            out << " max_ratio=" << buf;
        }
        out << '\n';
        for (const auto& [key, cnt] : r.histogram)
            out << r.n << '\t' << key << '\t' << cnt << '\n';
        out << '\n';
    }
    return out.str();
}

int run_stats(const std::string& range_text, const std::string& table,
              const std::string& metric_name, const std::string& format,
              std::int64_t samples, std::uint64_t seed, int threads,
              const std::string& output) {
    auto [from, to] = parse_range(range_text);
    if (from < 1)
        throw usage_error("--n must start at 1 or later");

    std::ofstream file;
    std::ostream& out = open_output(file, output);

    if (table == "stats") {
        maxla::run_mode mode = samples > 0 ? maxla::run_mode::sampled(samples, seed)
                                           : maxla::run_mode::all();
        auto rows = maxla::stats_table(from, to, mode, threads);
        if (format == "csv")
            out << maxla::emit_csv(rows);
        else if (format == "tsv")
            out << maxla::emit_tsv(rows);
        else
            out << maxla::emit_jsonl(rows);
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].n >= 7 && rows[i].p_bip > rows[i - 1].p_bip)
                std::cerr << "warning: p_bip increased from n=" << rows[i - 1].n
                          << " to n=" << rows[i].n << '\n';
        return exit_ok;
    }
    if (samples > 0)
        throw usage_error("--samples is only supported with --table stats");
    if (table == "two-linear") {
        out << maxla::emit_csv(maxla::two_linear_table(from, to, threads));
        return exit_ok;
    }
    if (table == "conditioning") {
        out << maxla::emit_csv(maxla::thistle_conditioning(from, to, threads));
        return exit_ok;
    }
    // distributions
    maxla::tree_metric metric;
    if (metric_name == "ratio")
        metric = maxla::tree_metric::ratio;
    else if (metric_name == "delta")
        metric = maxla::tree_metric::delta;
    else if (metric_name == "delta-heuristic")
        metric = maxla::tree_metric::delta_heuristic;
    else if (metric_name == "multi-thistle-gap")
        metric = maxla::tree_metric::multi_thistle_gap;
    else
        throw usage_error("unknown metric: " + metric_name);
    out << emit_distributions(maxla::distributions(from, to, metric, threads));
    return exit_ok;
}

// --- verify -----------------------------------------------------------

struct suite_outcome {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
};

suite_outcome verify_oracle(int max_n, int threads) {
    suite_outcome out{"oracle-equivalence"};
    for (int n = 1; n <= max_n; ++n) {
        maxla::enumerate_free_trees(n, [&](const maxla::free_tree& t) {
            ++out.cases;
            auto brute = maxla::brute_maxla(t.g());
            maxla::bnb_options opts;
            opts.threads = threads;
            opts.collect_witnesses = false;
            auto search = maxla::bnb_solve(t, opts);
            bool ok = brute.value == search.value &&
                      brute.has_bipartite_maximum == search.has_bipartite_maximum &&
                      brute.has_nonbipartite_maximum == search.has_nonbipartite_maximum &&
                      brute.min_thistles == search.min_thistles &&
                      brute.one_thistle_maximum == search.one_thistle_maximum;
            if (!ok)
                ++out.failures;
        });
    }
    return out;
}

maxla::arrangement random_arrangement(int n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    return maxla::arrangement(std::move(order));
}

suite_outcome verify_swap_lemma(std::int64_t cases, std::uint64_t seed) {
    suite_outcome out{"swap-lemma"};
    std::mt19937_64 rng(seed);
    maxla::rooted_tree_counts counts(12);
    for (std::int64_t c = 0; c < cases; ++c) {
        ++out.cases;
        int n = 2 + static_cast<int>(rng() % 11); // 2..12
        auto t = maxla::sample_free_tree(n, rng, counts);
        auto a = random_arrangement(n, rng);
        int i = 1 + static_cast<int>(rng() % n);
        int j = 1 + static_cast<int>(rng() % n);
        if (i == j)
            j = (j % n) + 1;
        if (i > j)
            std::swap(i, j);

        auto delta = maxla::swap_deltas(t.g(), a, i, j);
        auto b = maxla::apply_swap(a, i, j);

        bool ok = maxla::cost(t.g(), b) - maxla::cost(t.g(), a) == delta.cost_delta;
        auto la = maxla::level_signature(t.g(), a);
        auto lb = maxla::level_signature(t.g(), b);
        for (int p = 1; p <= n && ok; ++p) {
            int v = b.vertex_at(p);
            std::int64_t before = la[a.position(v) - 1];
            ok = lb[p - 1] == before + delta.level_delta[v];
        }
        auto ca = maxla::cut_signature(t.g(), a);
        auto cb = maxla::cut_signature(t.g(), b);
        for (int p = 0; p + 1 < n && ok; ++p)
            ok = cb[p] == ca[p] + delta.cut_delta[p];
        if (!ok)
            ++out.failures;
    }
    return out;
}

suite_outcome verify_signatures(std::int64_t cases, std::uint64_t seed) {
    suite_outcome out{"signature-identities"};
    std::mt19937_64 rng(seed);
    maxla::rooted_tree_counts counts(12);
    for (std::int64_t c = 0; c < cases; ++c) {
        ++out.cases;
        int n = 1 + static_cast<int>(rng() % 12); // 1..12
        auto t = maxla::sample_free_tree(n, rng, counts);
        auto a = random_arrangement(n, rng);

        auto levels = maxla::level_signature(t.g(), a);
        auto cuts = maxla::cut_signature(t.g(), a);
        std::int64_t level_sum = 0, cut_sum = 0, weighted = 0;
        for (int p = 1; p <= n; ++p) {
            level_sum += levels[p - 1];
            weighted += static_cast<std::int64_t>(n - p) * levels[p - 1];
        }
        for (auto c2 : cuts)
            cut_sum += c2;
        auto d = maxla::cost(t.g(), a);
        if (level_sum != 0 || d != cut_sum || d != weighted)
            ++out.failures;
    }
    return out;
}

int run_verify(const std::string& suite, std::int64_t cases, std::uint64_t seed,
               int max_n, int threads) {
    std::vector<suite_outcome> outcomes;
    if (suite == "oracle" || suite == "all")
        outcomes.push_back(verify_oracle(max_n, threads));
    if (suite == "swap-lemma" || suite == "all")
        outcomes.push_back(verify_swap_lemma(cases, seed));
    if (suite == "signatures" || suite == "all")
        outcomes.push_back(verify_signatures(cases, seed));
    if (outcomes.empty())
        throw usage_error("unknown suite: " + suite);

    bool failed = false;
    for (const auto& o : outcomes) {
        std::cout << o.name << ": " << o.cases << " cases, " << o.failures
                  << " failures\n";
        failed = failed || o.failures > 0;
    }
    return failed ? exit_verify_failed : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum linear arrangement toolkit for trees and cycles"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->capture_default_str();

    // solve
    auto* solve = app.add_subcommand("solve", "Maximize an edge-list input exactly");
    std::string solve_input;
    bool solve_fast = false, solve_exact = false;
    solve->add_option("input", solve_input, "Edge list file ('-' or empty = stdin)");
    auto* fast_flag = solve->add_flag("--fast", solve_fast, "Constructive lower bound");
    solve->add_flag("--exact", solve_exact, "Exact search (default)")
        ->excludes(fast_flag);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference (n <= 12)");
    std::string oracle_input, oracle_restrict;
    int oracle_k = 1;
    oracle->add_option("input", oracle_input, "Edge list file ('-' or empty = stdin)");
    oracle->add_option("--restrict", oracle_restrict, "bipartite | k-thistles")
        ->check(CLI::IsMember({"bipartite", "k-thistles"}));
    oracle->add_option("--k", oracle_k, "Thistle count for --restrict k-thistles")
        ->capture_default_str();

    // classify
    auto* classify = app.add_subcommand("classify", "Print tree shape and potential thistles");
    std::string classify_input;
    classify->add_option("input", classify_input, "Edge list file ('-' or empty = stdin)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List all n-vertex free trees");
    int enum_n = 0;
    bool enum_count = false;
    std::string enum_output;
    enumerate->add_option("--n", enum_n, "Number of vertices")->required();
    enumerate->add_flag("--count-only", enum_count, "Print the count instead");
    enumerate->add_option("-o,--output", enum_output, "Output file (default stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "Sample free trees uniformly");
    int sample_n = 0;
    std::int64_t sample_count = 1;
    std::uint64_t sample_seed = 1;
    std::string sample_output;
    sample->add_option("--n", sample_n, "Number of vertices")->required();
    sample->add_option("--count", sample_count, "Trees to draw")->capture_default_str();
    sample->add_option("--seed", sample_seed, "Random seed")->capture_default_str();
    sample->add_option("-o,--output", sample_output, "Output file (default stdout)");

    // stats
    auto* stats = app.add_subcommand("stats", "Experiment tables over tree corpora");
    std::string stats_range, stats_table_name = "stats", stats_metric = "ratio";
    std::string stats_format = "csv", stats_output;
    std::int64_t stats_samples = 0;
    std::uint64_t stats_seed = 1;
    bool stats_exhaustive = false;
    stats->add_option("--n", stats_range, "Vertex count or range A..B")->required();
    stats->add_option("--table", stats_table_name,
                      "stats | two-linear | conditioning | distributions")
        ->check(CLI::IsMember({"stats", "two-linear", "conditioning", "distributions"}))
        ->capture_default_str();
    stats->add_option("--metric", stats_metric,
                      "ratio | delta | delta-heuristic | multi-thistle-gap")
        ->capture_default_str();
    stats->add_option("--format", stats_format, "csv | tsv | jsonl")
        ->check(CLI::IsMember({"csv", "tsv", "jsonl"}))
        ->capture_default_str();
    auto* samples_opt =
        stats->add_option("--samples", stats_samples, "Sample count (default exhaustive)");
    stats->add_flag("--exhaustive", stats_exhaustive, "Enumerate every tree (default)")
        ->excludes(samples_opt);
    stats->add_option("--seed", stats_seed, "Random seed for sampling")
        ->capture_default_str();
    stats->add_option("-o,--output", stats_output, "Output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Randomized self-check suites");
    std::string verify_suite = "all";
    std::int64_t verify_cases = 1000;
    std::uint64_t verify_seed = 1;
    int verify_max_n = 8;
    verify->add_option("--suite", verify_suite, "oracle | swap-lemma | signatures | all")
        ->check(CLI::IsMember({"oracle", "swap-lemma", "signatures", "all"}))
        ->capture_default_str();
    verify->add_option("--cases", verify_cases, "Randomized cases per suite")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "Random seed")->capture_default_str();
    verify->add_option("--max-n", verify_max_n, "Largest n for oracle equivalence")
        ->check(CLI::Range(1, 9))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed())
            return run_solve(solve_input, solve_fast, threads);
        if (oracle->parsed())
            return run_oracle(oracle_input, oracle_restrict, oracle_k);
        if (classify->parsed())
            return run_classify(classify_input);
        if (enumerate->parsed())
            return run_enumerate(enum_n, enum_output, enum_count);
        if (sample->parsed())
            return run_sample(sample_n, sample_count, sample_seed, sample_output);
        if (stats->parsed())
            return run_stats(stats_range, stats_table_name, stats_metric, stats_format,
                             stats_samples, stats_seed, threads, stats_output);
        if (verify->parsed())
            return run_verify(verify_suite, verify_cases, verify_seed, verify_max_n,
                              threads);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const maxla::parse_error& e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
