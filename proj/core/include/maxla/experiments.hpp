#pragma once

#include "maxla/bnb.hpp"
#include "maxla/free_tree.hpp"
#include "maxla/oracle.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace maxla {

struct run_mode {
    bool exhaustive = true;
    std::int64_t samples = 0;   // when !exhaustive
    std::uint64_t seed = 0;

    static run_mode all() { return {}; }
    static run_mode sampled(std::int64_t count, std::uint64_t seed) {
        return run_mode{false, count, seed};
    }
};

// Per-n maximizability counts. Identities: bip_only + both == admit_bip and
// admit_bip + nonbip_only == total; one_thistle_solved <= nonbip_only.
struct stats_record {
    int n = 0;
    std::int64_t total = 0;
    std::int64_t bip_only = 0;
    std::int64_t both = 0;
    std::int64_t admit_bip = 0;
    std::int64_t nonbip_only = 0;
    std::int64_t one_thistle_solved = 0; // nonbip-only trees where some
                                         // maximum has exactly one thistle
    double p_bip = 0.0;                  // admit_bip / total
    double p_one = 0.0;                  // one_thistle_solved / nonbip_only (0 if none)
    // 99% bootstrap percentile interval for p_bip, sampled mode only.
    bool has_ci = false;
    double p_bip_ci_low = 0.0;
    double p_bip_ci_high = 0.0;
    run_mode mode;
};

// Classification of one tree: exhaustive enumeration for small n, witness
// inspection of the exact search otherwise.
maximizability_class classify_tree(const free_tree& t, int oracle_max_n = 9, int threads = 1);

std::vector<stats_record> stats_table(int n_from, int n_to, const run_mode& mode = {},
                                      int threads = 1);

// Two-linear trees broken down by bridge length.
struct two_linear_record {
    int n = 0;
    int bridge_length = 0;
    std::int64_t bip_only = 0;
    std::int64_t nonbip_only = 0;
    std::int64_t both = 0;
};

std::vector<two_linear_record> two_linear_table(int n_from, int n_to, int threads = 1);

// Bipartite-maximizability conditioned on the potential thistle count.
struct thistle_conditioning_record {
    int n = 0;
    int phi = 0;
    std::int64_t trees = 0;
    std::int64_t admit_bip = 0;
    double p = 0.0; // admit_bip / trees
};

struct kendall_result {
    double tau = 0.0; // tau-b, tie-corrected
    double z = 0.0;
    double p_value = 0.0; // two-sided normal approximation
    bool defined = false;
};

kendall_result kendall_tau_b(const std::vector<double>& xs, const std::vector<double>& ys);

struct thistle_conditioning_table {
    std::vector<thistle_conditioning_record> rows;
    // Per n: tau between phi and the conditional bipartite-maximizability.
    std::map<int, kendall_result> tau_by_n;
};

thistle_conditioning_table thistle_conditioning(int n_from, int n_to, int threads = 1);

// Histogram of a per-tree metric.
enum class tree_metric {
    ratio,            // D_max / bipartite value, all trees
    delta,            // D_max - bipartite value, nonbip-only trees
    delta_heuristic,  // D_max - rotation heuristic value, nonbip-only trees
    multi_thistle_gap // D_max - one-thistle value, nonbip-only trees the
                      // one-thistle search does not solve
};

struct distribution_record {
    int n = 0;
    tree_metric metric = tree_metric::delta;
    std::map<std::int64_t, std::int64_t> histogram; // value -> count (delta metrics)
    double max_ratio = 0.0;                         // ratio metric
    std::int64_t trees = 0;
};

std::vector<distribution_record> distributions(int n_from, int n_to, tree_metric metric,
                                               int threads = 1);

// Emitters. CSV and TSV share headers; JSON lines carry one object per row.
std::string emit_csv(const std::vector<stats_record>& rows);
std::string emit_tsv(const std::vector<stats_record>& rows);
std::string emit_jsonl(const std::vector<stats_record>& rows);
std::string emit_csv(const std::vector<two_linear_record>& rows);
std::string emit_csv(const thistle_conditioning_table& table);

} // namespace maxla
