#include "maxla/experiments.hpp"

#include "maxla/solvers.hpp"
#include "maxla/treegen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

namespace maxla {

namespace {

std::uint64_t uniform64_below(std::mt19937_64& rng, std::uint64_t m) {
    if (m <= 1)
        return 0;
    std::uint64_t rem = (~std::uint64_t{0} % m + 1) % m;
    std::uint64_t x;
    do {
        x = rng();
    } while (rem != 0 && x >= std::uint64_t{0} - rem);
    return x % m;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

template <typename Fn>
void parallel_for(std::int64_t count, int threads, Fn&& body) {
    if (threads <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    threads = std::min<std::int64_t>(threads, count);
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                body(i);
        });
    for (auto& th : pool)
        th.join();
}

std::vector<free_tree> trees_for(int n, const run_mode& mode) {
    if (mode.exhaustive)
        return all_free_trees(n);
    std::vector<free_tree> out;
    out.reserve(mode.samples);
    std::mt19937_64 rng(mix_seed(mode.seed, static_cast<std::uint64_t>(n)));
    rooted_tree_counts counts(n);
    for (std::int64_t i = 0; i < mode.samples; ++i)
        out.push_back(sample_free_tree(n, rng, counts));
    return out;
}

std::vector<maximizability_class> classify_all(const std::vector<free_tree>& trees,
                                               int oracle_max_n, int threads) {
    std::vector<maximizability_class> out(trees.size());
    parallel_for(static_cast<std::int64_t>(trees.size()), threads,
                 [&](std::int64_t i) { out[i] = classify_tree(trees[i], oracle_max_n, 1); });
    return out;
}

std::string mode_string(const run_mode& mode) {
    if (mode.exhaustive)
        return "exhaustive";
    std::ostringstream out;
    out << "samples=" << mode.samples << ";seed=" << mode.seed;
    return out.str();
}

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

// 99% percentile bootstrap interval for a sample proportion.
void bootstrap_ci(std::int64_t successes, std::int64_t size, std::uint64_t seed,
                  double& low, double& high) {
    constexpr int resamples = 10000;
    if (size <= 0) {
        low = high = 0.0;
        return;
    }
    std::mt19937_64 rng(seed);
    std::vector<double> means(resamples);
    for (int r = 0; r < resamples; ++r) {
        std::int64_t hits = 0;
        for (std::int64_t i = 0; i < size; ++i)
            hits += uniform64_below(rng, static_cast<std::uint64_t>(size)) <
                    static_cast<std::uint64_t>(successes);
        means[r] = static_cast<double>(hits) / static_cast<double>(size);
    }
    std::sort(means.begin(), means.end());
    low = means[static_cast<int>(0.005 * (resamples - 1))];
    high = means[static_cast<int>(0.995 * (resamples - 1))];
}

} // namespace

maximizability_class classify_tree(const free_tree& t, int oracle_max_n, int threads) {
    if (t.num_vertices() <= oracle_max_n)
        return classify_maximizability(t.g());
    bnb_options opts;
    opts.threads = threads;
    opts.collect_witnesses = false;
    auto r = bnb_solve(t, opts);
    maximizability_class out;
    if (r.has_bipartite_maximum && r.has_nonbipartite_maximum)
        out.kind = maximizability::both;
    else if (r.has_bipartite_maximum)
        out.kind = maximizability::bipartite_only;
    else
        out.kind = maximizability::nonbipartite_only;
    out.min_thistles = r.min_thistles;
    out.one_thistle_solves = r.one_thistle_maximum;
    return out;
}

std::vector<stats_record> stats_table(int n_from, int n_to, const run_mode& mode,
                                      int threads) {
    std::vector<stats_record> out;
    for (int n = n_from; n <= n_to; ++n) {
        auto trees = trees_for(n, mode);
        auto classes = classify_all(trees, 9, threads);
        stats_record rec;
        rec.n = n;
        rec.mode = mode;
        rec.total = static_cast<std::int64_t>(trees.size());
        for (const auto& c : classes) {
            switch (c.kind) {
            case maximizability::bipartite_only:
                ++rec.bip_only;
                break;
            case maximizability::both:
                ++rec.both;
                break;
            case maximizability::nonbipartite_only:
                ++rec.nonbip_only;
                if (c.one_thistle_solves)
                    ++rec.one_thistle_solved;
                break;
            }
        }
        rec.admit_bip = rec.bip_only + rec.both;
        rec.p_bip = rec.total ? static_cast<double>(rec.admit_bip) / rec.total : 0.0;
        rec.p_one = rec.nonbip_only
                        ? static_cast<double>(rec.one_thistle_solved) / rec.nonbip_only
                        : 0.0;
        if (!mode.exhaustive) {
            rec.has_ci = true;
            bootstrap_ci(rec.admit_bip, rec.total,
                         mix_seed(mode.seed, 0xB007'0000u + static_cast<unsigned>(n)),
                         rec.p_bip_ci_low, rec.p_bip_ci_high);
        }
        out.push_back(rec);
    }
    return out;
}

std::vector<two_linear_record> two_linear_table(int n_from, int n_to, int threads) {
    std::vector<two_linear_record> out;
    for (int n = n_from; n <= n_to; ++n) {
        std::vector<free_tree> selected;
        std::vector<int> lengths;
        for (auto& t : all_free_trees(n)) {
            std::vector<int> hubs;
            for (int u = 0; u < n; ++u)
                if (t.degree(u) >= 3)
                    hubs.push_back(u);
            if (hubs.size() != 2)
                continue;
            // Bridge length = hub distance (the branchless path between them).
            std::vector<int> dist(n, -1), queue{hubs[0]};
            dist[hubs[0]] = 0;
            for (size_t head = 0; head < queue.size(); ++head)
                for (int w : t.neighbors(queue[head]))
                    if (dist[w] < 0) {
                        dist[w] = dist[queue[head]] + 1;
                        queue.push_back(w);
                    }
            selected.push_back(std::move(t));
            lengths.push_back(dist[hubs[1]]);
        }
        auto classes = classify_all(selected, 9, threads);
        std::map<int, two_linear_record> by_length;
        for (size_t i = 0; i < selected.size(); ++i) {
            auto& rec = by_length[lengths[i]];
            rec.n = n;
            rec.bridge_length = lengths[i];
            switch (classes[i].kind) {
            case maximizability::bipartite_only:
                ++rec.bip_only;
                break;
            case maximizability::nonbipartite_only:
                ++rec.nonbip_only;
                break;
            case maximizability::both:
                ++rec.both;
                break;
            }
        }
        for (auto& [len, rec] : by_length)
            out.push_back(rec);
    }
    return out;
}

kendall_result kendall_tau_b(const std::vector<double>& xs, const std::vector<double>& ys) {
    kendall_result out;
    int n = static_cast<int>(std::min(xs.size(), ys.size()));
    if (n < 2)
        return out;
    std::int64_t concordant_minus_discordant = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dx = xs[j] - xs[i], dy = ys[j] - ys[i];
            double s = dx * dy;
            if (s > 0)
                ++concordant_minus_discordant;
            else if (s < 0)
                --concordant_minus_discordant;
        }
    auto tie_sums = [n](const std::vector<double>& v, double& pairs, double& v_term,
                        double& t1, double& t2) {
        std::vector<double> sorted(v.begin(), v.begin() + n);
        std::sort(sorted.begin(), sorted.end());
        pairs = v_term = t1 = t2 = 0;
        for (int i = 0; i < n;) {
            int j = i;
            while (j < n && sorted[j] == sorted[i])
                ++j;
            double t = j - i;
            pairs += t * (t - 1) / 2;
            v_term += t * (t - 1) * (2 * t + 5);
            t1 += t * (t - 1);
            t2 += t * (t - 1) * (t - 2);
            i = j;
        }
    };
    double n0 = static_cast<double>(n) * (n - 1) / 2;
    double n1, vt, xt1, xt2, n2, vu, yt1, yt2;
    tie_sums(xs, n1, vt, xt1, xt2);
    tie_sums(ys, n2, vu, yt1, yt2);
    double denom = (n0 - n1) * (n0 - n2);
    if (denom <= 0)
        return out;
    out.tau = concordant_minus_discordant / std::sqrt(denom);
    double v0 = static_cast<double>(n) * (n - 1) * (2.0 * n + 5);
    double var = (v0 - vt - vu) / 18.0 +
                 xt1 * yt1 / (2.0 * n * (n - 1)) +
                 (n > 2 ? xt2 * yt2 / (9.0 * n * (n - 1) * (n - 2)) : 0.0);
    if (var > 0) {
        out.z = concordant_minus_discordant / std::sqrt(var);
        out.p_value = std::erfc(std::abs(out.z) / std::sqrt(2.0));
    }
    out.defined = true;
    return out;
}

thistle_conditioning_table thistle_conditioning(int n_from, int n_to, int threads) {
    thistle_conditioning_table out;
    for (int n = n_from; n <= n_to; ++n) {
        auto trees = all_free_trees(n);
        auto classes = classify_all(trees, 9, threads);
        std::map<int, thistle_conditioning_record> by_phi;
        for (size_t i = 0; i < trees.size(); ++i) {
            int phi = potential_thistles(trees[i]).phi;
            auto& rec = by_phi[phi];
            rec.n = n;
            rec.phi = phi;
            ++rec.trees;
            if (classes[i].kind != maximizability::nonbipartite_only)
                ++rec.admit_bip;
        }
        std::vector<double> xs, ys;
        for (auto& [phi, rec] : by_phi) {
            rec.p = static_cast<double>(rec.admit_bip) / rec.trees;
            xs.push_back(phi);
            ys.push_back(rec.p);
            out.rows.push_back(rec);
        }
        out.tau_by_n[n] = kendall_tau_b(xs, ys);
    }
    return out;
}

std::vector<distribution_record> distributions(int n_from, int n_to, tree_metric metric,
                                               int threads) {
    std::vector<distribution_record> out;
    for (int n = n_from; n <= n_to; ++n) {
        auto trees = all_free_trees(n);
        struct eval {
            bool in_scope = false;
            std::int64_t key = 0;
            double ratio = 0.0;
        };
        std::vector<eval> evals(trees.size());
        parallel_for(static_cast<std::int64_t>(trees.size()), threads, [&](std::int64_t i) {
            const free_tree& t = trees[i];
            bnb_options opts;
            opts.collect_witnesses = false;
            auto r = bnb_solve(t, opts);
            eval e;
            switch (metric) {
            case tree_metric::ratio:
                e.in_scope = r.bipartite_value > 0;
                if (e.in_scope) {
                    e.key = r.value - r.bipartite_value;
                    e.ratio = static_cast<double>(r.value) / r.bipartite_value;
                }
                break;
            case tree_metric::delta:
                e.in_scope = !r.has_bipartite_maximum;
                e.key = r.value - r.bipartite_value;
                break;
            case tree_metric::delta_heuristic:
                if (!r.has_bipartite_maximum) {
                    e.in_scope = true;
                    auto seed = bipartite_maxla(t);
                    auto improved = rotation_heuristic(t.g(), seed.witness);
                    e.key = r.value - improved.value;
                }
                break;
            case tree_metric::multi_thistle_gap:
                if (!r.has_bipartite_maximum) {
                    std::int64_t approx = r.bipartite_value;
                    if (auto ot = one_thistle_maxla(t))
                        approx = std::max(approx, ot->value);
                    if (approx < r.value) {
                        e.in_scope = true;
                        e.key = r.value - approx;
                        e.ratio = static_cast<double>(r.value) / approx;
                    }
                }
                break;
            }
            evals[i] = e;
        });
        distribution_record rec;
        rec.n = n;
        rec.metric = metric;
        for (const auto& e : evals) {
            if (!e.in_scope)
                continue;
            ++rec.trees;
            ++rec.histogram[e.key];
            rec.max_ratio = std::max(rec.max_ratio, e.ratio);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

std::string emit_stats(const std::vector<stats_record>& rows, char sep) {
    std::ostringstream out;
    out << "n" << sep << "total" << sep << "bip_only" << sep << "both" << sep
        << "admit_bip" << sep << "nonbip_only" << sep << "one_thistle_solved" << sep
        << "p_bip" << sep << "p_one" << sep << "mode";
    bool ci = std::any_of(rows.begin(), rows.end(),
                          [](const stats_record& r) { return r.has_ci; });
    if (ci)
        out << sep << "p_bip_ci_low" << sep << "p_bip_ci_high";
    out << "\n";
    for (const auto& r : rows) {
        out << r.n << sep << r.total << sep << r.bip_only << sep << r.both << sep
            << r.admit_bip << sep << r.nonbip_only << sep << r.one_thistle_solved << sep
            << fixed4(r.p_bip) << sep << fixed4(r.p_one) << sep << mode_string(r.mode);
        if (ci)
            out << sep << fixed4(r.p_bip_ci_low) << sep << fixed4(r.p_bip_ci_high);
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string emit_csv(const std::vector<stats_record>& rows) { return emit_stats(rows, ','); }

std::string emit_tsv(const std::vector<stats_record>& rows) { return emit_stats(rows, '\t'); }

std::string emit_jsonl(const std::vector<stats_record>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << "{\"n\":" << r.n << ",\"total\":" << r.total
            << ",\"bip_only\":" << r.bip_only << ",\"both\":" << r.both
            << ",\"admit_bip\":" << r.admit_bip << ",\"nonbip_only\":" << r.nonbip_only
            << ",\"one_thistle_solved\":" << r.one_thistle_solved
            << ",\"p_bip\":" << fixed4(r.p_bip) << ",\"p_one\":" << fixed4(r.p_one)
            << ",\"mode\":\"" << mode_string(r.mode) << "\"";
        if (r.has_ci)
            out << ",\"p_bip_ci_low\":" << fixed4(r.p_bip_ci_low)
                << ",\"p_bip_ci_high\":" << fixed4(r.p_bip_ci_high);
        out << "}\n";
    }
    return out.str();
}

std::string emit_csv(const std::vector<two_linear_record>& rows) {
    std::ostringstream out;
    out << "n,bridge_length,bip_only,nonbip_only,both\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.bridge_length << ',' << r.bip_only << ','
            << r.nonbip_only << ',' << r.both << "\n";
    return out.str();
}

std::string emit_csv(const thistle_conditioning_table& table) {
    std::ostringstream out;
    out << "n,phi,trees,admit_bip,p,tau,tau_p_value\n";
    for (const auto& r : table.rows) {
        out << r.n << ',' << r.phi << ',' << r.trees << ',' << r.admit_bip << ','
            << fixed4(r.p);
        auto it = table.tau_by_n.find(r.n);
        if (it != table.tau_by_n.end() && it->second.defined)
            out << ',' << fixed4(it->second.tau) << ',' << fixed4(it->second.p_value);
        else
            out << ",,";
        out << "\n";
    }
    return out.str();
}

} // namespace maxla
