#include "maxla/bnb.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <map>
#include <thread>

namespace maxla {

linear_set::linear_set(int capacity) : members_(capacity), where_(capacity, -1) {}

void linear_set::add(int key) {
    if (where_[key] >= 0)
        return;
    where_[key] = size_;
    members_[size_++] = key;
}

void linear_set::remove(int key) {
    int i = where_[key];
    if (i < 0)
        return;
    int last = members_[--size_];
    members_[i] = last;
    where_[last] = i;
    where_[key] = -1;
}

namespace {

struct search_context {
    const free_tree& t;
    const bnb_options& opts;
    int n;
    int m;
    int max_degree;
    bipartition colors;
    std::vector<int> internal_path; // per vertex: branchless path id, -1 if none
    std::vector<signed char> path_is_bridge;
    std::vector<int> roots;
    std::int64_t bip_value;
};

struct root_result {
    std::int64_t value = -1;
    std::vector<std::vector<int>> witness_orders;
    std::vector<std::vector<int>> witness_levels;
    int min_thistles = INT_MAX;
    bool one_thistle = false;
    bnb_stats stats;
};

bool same_level_class(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b)
        return true;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        if (a[i] != -b[n - 1 - i])
            return false;
    return true;
}

class search_worker {
public:
    search_worker(const search_context& ctx, std::atomic<std::int64_t>& shared_best)
        : ctx_(ctx), g_(ctx.t.g()), n_(ctx.n), shared_best_(shared_best),
          pos_(ctx.n, 0), level_(ctx.n, 0), assigned_deg_(ctx.n, 0), order_(ctx.n, 0),
          full_order_(ctx.n, 0), border_(ctx.n), bucket_count_(ctx.n + 1, 0),
          bridge_thistles_(ctx.path_is_bridge.size(), 0) {}

    root_result run(int root) {
        result_ = root_result{};
        if (ctx_.opts.symmetry_sibling_order)
            build_sibling_groups(root);
        place(root, ctx_.t.degree(root));
        ++result_.stats.expansions;
        expand();
        unplace(root);
        return std::move(result_);
    }

private:
    void build_sibling_groups(int root) {
        auto view = root_tree(ctx_.t, root);
        prev_siblings_.assign(n_, {});
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (int u = 0; u < n_; ++u)
            if (u != root)
                groups[{view.parent[u], view.subtree_id[u]}].push_back(u);
        for (auto& [key, members] : groups)
            for (size_t i = 1; i < members.size(); ++i)
                prev_siblings_[members[i]] =
                    std::vector<int>(members.begin(), members.begin() + i);
    }

    int suffix_edges() const { return ctx_.m - cnt_p_ - cnt_ps_; }

    bool check(int u, int& level_out) {
        const auto& opts = ctx_.opts;
        int level_u = ctx_.t.degree(u) - 2 * assigned_deg_[u];
        if (k_ > 0) {
            int prev = order_[k_ - 1];
            if (opts.prop2_level_order && level_u > level_[prev])
                return false;
            if (opts.symmetry_equal_level_order && level_[prev] == level_u &&
                prev > u && !g_.has_edge(prev, u))
                return false;
        }
        if (opts.prop3_neighbor_levels)
            for (int w : ctx_.t.neighbors(u))
                if (pos_[w] && level_[w] == level_u)
                    return false;
        if (opts.path_rule && level_u == 0 && ctx_.internal_path[u] >= 0) {
            int pid = ctx_.internal_path[u];
            if (!ctx_.path_is_bridge[pid] || bridge_thistles_[pid] >= 1)
                return false;
        }
        if (opts.unassigned_neighbor_rule)
            for (int w : ctx_.t.neighbors(u))
                if (!pos_[w]) {
                    // w ends after u, so its level must end below u's; its
                    // smallest reachable level is -degree(w).
                    if (-ctx_.t.degree(w) >= level_u)
                        return false;
                    if (opts.aggressive_neighbor_rule &&
                        ctx_.t.degree(w) - 2 * (assigned_deg_[w] + 1) >= level_u)
                        return false;
                }
        if (opts.symmetry_leaf_order && ctx_.t.degree(u) == 1) {
            for (int x : ctx_.t.leaves_of(ctx_.t.neighbors(u)[0])) {
                if (x >= u)
                    break;
                if (!pos_[x])
                    return false;
            }
        }
        if (opts.symmetry_sibling_order)
            for (int z : prev_siblings_[u])
                if (!pos_[z])
                    return false;
        level_out = level_u;
        return true;
    }

    void place(int u, int level_u) {
        pos_[u] = ++k_;
        order_[k_ - 1] = u;
        level_[u] = level_u;
        prefix_weighted_ += static_cast<std::int64_t>(n_ - k_) * level_u;
        if (std::abs(level_u) < ctx_.t.degree(u))
            ++prefix_thistles_;
        if (level_u == 0 && ctx_.internal_path[u] >= 0)
            ++bridge_thistles_[ctx_.internal_path[u]];
        ++placed_color_[ctx_.colors.color[u]];
        for (int w : ctx_.t.neighbors(u)) {
            ++assigned_deg_[w];
            if (pos_[w]) {
                ++cnt_p_;
                --cnt_ps_;
                s_ps_ -= pos_[w];
                d_p_ += k_ - pos_[w];
            } else {
                ++cnt_ps_;
                s_ps_ += k_;
                if (assigned_deg_[w] == 1)
                    border_.add(w);
            }
        }
        border_.remove(u);
    }

    void unplace(int u) {
        for (int w : ctx_.t.neighbors(u)) {
            --assigned_deg_[w];
            if (pos_[w]) {
                --cnt_p_;
                ++cnt_ps_;
                s_ps_ += pos_[w];
                d_p_ -= k_ - pos_[w];
            } else {
                --cnt_ps_;
                s_ps_ -= k_;
                if (assigned_deg_[w] == 0)
                    border_.remove(w);
            }
        }
        if (assigned_deg_[u] > 0)
            border_.add(u);
        --placed_color_[ctx_.colors.color[u]];
        int level_u = level_[u];
        if (level_u == 0 && ctx_.internal_path[u] >= 0)
            --bridge_thistles_[ctx_.internal_path[u]];
        if (std::abs(level_u) < ctx_.t.degree(u))
            --prefix_thistles_;
        prefix_weighted_ -= static_cast<std::int64_t>(n_ - k_) * level_u;
        pos_[u] = 0;
        --k_;
    }

    // Admissible cost bound for any completion: exact prefix part, prefix
    // anchors of the crossing edges, crossing edges closed as late as
    // possible (border vertices at the last positions, heaviest last), and
    // the suffix-suffix edges as long as m_s edges over n_s positions can be.
    std::int64_t upper_bound() {
        std::int64_t r = k_ + 1;
        std::int64_t b = d_p_ + static_cast<std::int64_t>(cnt_ps_) * r - s_ps_;
        int bcount = border_.size();
        for (int i = 0; i < bcount; ++i)
            ++bucket_count_[assigned_deg_[border_.member(i)]];
        std::int64_t p = n_ - bcount + 1;
        for (int d = 1; d <= ctx_.max_degree; ++d) {
            int c = bucket_count_[d];
            if (!c)
                continue;
            b += d * (c * p + static_cast<std::int64_t>(c) * (c - 1) / 2 - c * r);
            p += c;
            bucket_count_[d] = 0;
        }
        std::int64_t ms = suffix_edges();
        std::int64_t ns = n_ - k_;
        b += (ms * (4 * (ns - 1) - ms) + (ms & 1)) / 4;
        return b;
    }

    // No suffix-suffix edges left: every unassigned vertex has a forced
    // level of -degree, so the best completion lists them by degree
    // ascending (ties by index). Equal-cost completions permute equal
    // levels only, so one representative covers the class.
    void complete_sorted() {
        ++result_.stats.special_case_hits;
        if (prefix_thistles_ == 0)
            return; // completion is bipartite, dominated by the seed
        if (ctx_.opts.prop2_level_order && k_ > 0) {
            int delta_min = INT_MAX;
            for (int u = 0; u < n_; ++u)
                if (!pos_[u])
                    delta_min = std::min(delta_min, ctx_.t.degree(u));
            if (delta_min != INT_MAX && -delta_min > level_[order_[k_ - 1]])
                return; // no completion keeps the levels non-increasing
        }
        std::copy(order_.begin(), order_.begin() + k_, full_order_.begin());
        for (int u = 0; u < n_; ++u)
            if (!pos_[u])
                ++bucket_count_[ctx_.t.degree(u)];
        std::vector<int> start(ctx_.max_degree + 2, 0);
        int at = k_;
        for (int d = 1; d <= ctx_.max_degree; ++d) {
            start[d] = at;
            at += bucket_count_[d];
            bucket_count_[d] = 0;
        }
        std::int64_t value = prefix_weighted_;
        for (int u = 0; u < n_; ++u)
            if (!pos_[u]) {
                int d = ctx_.t.degree(u);
                int p = ++start[d];
                full_order_[p - 1] = u;
                value += static_cast<std::int64_t>(n_ - p) * (-d);
            }
        record(value, prefix_thistles_);
    }

    void record(std::int64_t value, int thistles) {
        if (value < shared_best_.load(std::memory_order_relaxed) || value < result_.value)
            return;
        if (ctx_.opts.largest_cut_check) {
            std::int64_t run = 0, top = 0;
            for (int p = 0; p + 1 < n_; ++p) {
                int u = full_order_[p];
                run += pos_[u] ? level_[u] : -ctx_.t.degree(u);
                top = std::max(top, run);
            }
            if (2 * top < static_cast<std::int64_t>(n_) * n_ - 1)
                return;
        }
        if (value > result_.value) {
            result_.value = value;
            result_.witness_orders.clear();
            result_.witness_levels.clear();
            result_.min_thistles = INT_MAX;
            result_.one_thistle = false;
        }
        result_.min_thistles = std::min(result_.min_thistles, thistles);
        result_.one_thistle |= thistles == 1;
        if (ctx_.opts.collect_witnesses &&
            static_cast<int>(result_.witness_orders.size()) < ctx_.opts.witness_cap) {
            std::vector<int> levels(n_);
            for (int p = 0; p < n_; ++p) {
                int u = full_order_[p];
                levels[p] = pos_[u] ? level_[u] : -ctx_.t.degree(u);
            }
            bool fresh = std::none_of(
                result_.witness_levels.begin(), result_.witness_levels.end(),
                [&](const auto& sig) { return same_level_class(sig, levels); });
            if (fresh) {
                result_.witness_orders.emplace_back(full_order_.begin(), full_order_.end());
                result_.witness_levels.push_back(std::move(levels));
            }
        }
        std::int64_t cur = shared_best_.load(std::memory_order_relaxed);
        while (cur < value &&
               !shared_best_.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
        }
    }

    void expand() {
        const auto& opts = ctx_.opts;
        if (k_ == n_) {
            if (prefix_thistles_ > 0) {
                std::copy(order_.begin(), order_.end(), full_order_.begin());
                record(prefix_weighted_, prefix_thistles_);
            }
            return;
        }
        if (opts.bipartite_prefix_prune && prefix_thistles_ == 0 &&
            (placed_color_[0] == ctx_.colors.count[0] ||
             placed_color_[1] == ctx_.colors.count[1]))
            return; // the rest of one side is gone; every completion is bipartite
        if (opts.special_case_completion && suffix_edges() == 0) {
            complete_sorted();
            return;
        }
        if (opts.upper_bound &&
            upper_bound() < shared_best_.load(std::memory_order_relaxed)) {
            ++result_.stats.bound_prunes;
            return;
        }
        for (int u = 0; u < n_; ++u) {
            if (pos_[u])
                continue;
            int level_u;
            if (!check(u, level_u)) {
                ++result_.stats.constraint_rejects;
                continue;
            }
            place(u, level_u);
            ++result_.stats.expansions;
            expand();
            unplace(u);
        }
    }

    const search_context& ctx_;
    const graph& g_;
    int n_;
    std::atomic<std::int64_t>& shared_best_;

    std::vector<int> pos_, level_, assigned_deg_, order_, full_order_;
    linear_set border_;
    std::vector<int> bucket_count_;
    std::vector<int> bridge_thistles_;
    std::vector<std::vector<int>> prev_siblings_;
    int k_ = 0;
    int cnt_p_ = 0, cnt_ps_ = 0;
    std::int64_t s_ps_ = 0, d_p_ = 0, prefix_weighted_ = 0;
    int prefix_thistles_ = 0;
    int placed_color_[2] = {0, 0};

    root_result result_;
};

} // namespace

bnb_result bnb_solve(const free_tree& t, const bnb_options& opts) {
    int n = t.num_vertices();
    bnb_result out;

    auto bip = bipartite_maxla(t);
    out.bipartite_value = bip.value;

    if (n <= 2) {
        out.value = bip.value;
        out.has_bipartite_maximum = true;
        if (opts.collect_witnesses && opts.witness_cap > 0)
            out.witnesses.push_back(bip.witness);
        return out;
    }

    search_context ctx{t, opts, n, t.g().num_edges(), t.g().max_degree(), {}, {}, {}, {},
                       bip.value};
    try_bipartition(t.g(), ctx.colors);
    ctx.internal_path.assign(n, -1);
    auto paths = find_branchless_paths(t);
    ctx.path_is_bridge.resize(paths.size());
    for (size_t i = 0; i < paths.size(); ++i) {
        ctx.path_is_bridge[i] = paths[i].is_bridge;
        for (size_t j = 1; j + 1 < paths[i].vertices.size(); ++j)
            ctx.internal_path[paths[i].vertices[j]] = static_cast<int>(i);
    }
    if (opts.symmetry_root_orbits)
        ctx.roots = vertex_orbits(t).representatives;
    else {
        ctx.roots.resize(n);
        for (int u = 0; u < n; ++u)
            ctx.roots[u] = u;
    }

    std::atomic<std::int64_t> shared_best{bip.value};
    std::vector<root_result> per_root(ctx.roots.size());

    int threads = opts.threads;
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(ctx.roots.size())));

    if (threads == 1) {
        search_worker worker(ctx, shared_best);
        for (size_t i = 0; i < ctx.roots.size(); ++i)
            per_root[i] = worker.run(ctx.roots[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                search_worker worker(ctx, shared_best);
                for (size_t i = next.fetch_add(1); i < ctx.roots.size();
                     i = next.fetch_add(1))
                    per_root[i] = worker.run(ctx.roots[i]);
            });
        for (auto& th : pool)
            th.join();
    }

    std::int64_t best = bip.value;
    for (const auto& r : per_root)
        best = std::max(best, r.value);
    out.value = best;
    out.has_bipartite_maximum = bip.value == best;

    std::vector<std::vector<int>> kept_levels;
    auto keep_witness = [&](arrangement a, std::vector<int> levels) {
        if (!opts.collect_witnesses ||
            static_cast<int>(out.witnesses.size()) >= opts.witness_cap)
            return;
        for (const auto& sig : kept_levels)
            if (same_level_class(sig, levels))
                return;
        out.witnesses.push_back(std::move(a));
        kept_levels.push_back(std::move(levels));
    };

    if (out.has_bipartite_maximum) {
        out.min_thistles = 0;
        keep_witness(bip.witness, level_signature(t.g(), bip.witness));
    } else {
        out.min_thistles = INT_MAX;
    }

    for (auto& r : per_root) {
        out.stats.expansions += r.stats.expansions;
        out.stats.bound_prunes += r.stats.bound_prunes;
        out.stats.constraint_rejects += r.stats.constraint_rejects;
        out.stats.special_case_hits += r.stats.special_case_hits;
        if (r.value != best)
            continue;
        out.has_nonbipartite_maximum = true;
        out.min_thistles = std::min(out.min_thistles, r.min_thistles);
        out.one_thistle_maximum |= r.one_thistle;
        for (size_t i = 0; i < r.witness_orders.size(); ++i)
            keep_witness(arrangement(std::move(r.witness_orders[i])),
                         std::move(r.witness_levels[i]));
    }
    return out;
}

} // namespace maxla
