#include "maxla/oracle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace maxla {

namespace {

bool same_level_class(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b)
        return true;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        if (a[i] != -b[n - 1 - i])
            return false;
    return true;
}

struct sweep_state {
    std::int64_t value = -1;
    std::vector<arrangement> witnesses;
    std::vector<std::vector<int>> witness_levels;
    std::int64_t maxima_count = 0;
    bool has_bip = false;
    bool has_nonbip = false;
    int min_thistles = INT_MAX;
    bool one_thistle = false;

    void admit(const graph& g, const std::vector<int>& order,
               const std::vector<int>& pos, std::int64_t cost, int cap) {
        if (cost > value) {
            value = cost;
            witnesses.clear();
            witness_levels.clear();
            maxima_count = 0;
            has_bip = has_nonbip = false;
            min_thistles = INT_MAX;
            one_thistle = false;
        }
        ++maxima_count;
        int n = g.num_vertices();
        std::vector<int> levels(n, 0);
        for (auto [u, v] : g.edges()) {
            if (pos[u] < pos[v]) {
                ++levels[pos[u] - 1];
                --levels[pos[v] - 1];
            } else {
                ++levels[pos[v] - 1];
                --levels[pos[u] - 1];
            }
        }
        int thistles = 0;
        for (int p = 0; p < n; ++p)
            if (std::abs(levels[p]) < g.degree(order[p]))
                ++thistles;
        (thistles == 0 ? has_bip : has_nonbip) = true;
        min_thistles = std::min(min_thistles, thistles);
        one_thistle |= thistles == 1;
        if (static_cast<int>(witnesses.size()) < cap) {
            bool fresh = std::none_of(
                witness_levels.begin(), witness_levels.end(),
                [&](const auto& sig) { return same_level_class(sig, levels); });
            if (fresh) {
                witnesses.emplace_back(std::vector<int>(order));
                witness_levels.push_back(std::move(levels));
            }
        }
    }

    oracle_result finish() && {
        oracle_result out;
        out.value = value;
        out.witnesses = std::move(witnesses);
        out.maxima_count = maxima_count;
        out.has_bipartite_maximum = has_bip;
        out.has_nonbipartite_maximum = has_nonbip;
        out.min_thistles = min_thistles == INT_MAX ? 0 : min_thistles;
        out.one_thistle_maximum = one_thistle;
        return out;
    }
};

template <typename Filter>
std::optional<oracle_result> sweep(const graph& g, const oracle_options& opts,
                                   Filter&& keep) {
    int n = g.num_vertices();
    if (n == 0)
        return std::nullopt;
    std::vector<int> order(n), pos(n);
    std::iota(order.begin(), order.end(), 0);
    sweep_state state;
    do {
        if (opts.halve_by_mirror && n >= 2 && order.front() > order.back())
            continue;
        for (int p = 0; p < n; ++p)
            pos[order[p]] = p + 1;
        if (!keep(order, pos))
            continue;
        std::int64_t cost = 0;
        for (auto [u, v] : g.edges())
            cost += std::abs(pos[u] - pos[v]);
        if (cost >= state.value)
            state.admit(g, order, pos, cost, opts.witness_cap);
    } while (std::next_permutation(order.begin(), order.end()));
    if (state.value < 0)
        return std::nullopt;
    return std::move(state).finish();
}

} // namespace

oracle_result brute_maxla(const graph& g, const oracle_options& opts) {
    if (g.num_vertices() == 0)
        throw std::invalid_argument("cannot sweep arrangements of an empty graph");
    auto out = sweep(g, opts, [](const auto&, const auto&) { return true; });
    return std::move(*out);
}

std::optional<oracle_result> brute_restricted(const graph& g,
                                              const arrangement_predicate& keep,
                                              const oracle_options& opts) {
    return sweep(g, opts, [&](const std::vector<int>& order, const std::vector<int>&) {
        return keep(g, arrangement(std::vector<int>(order)));
    });
}

arrangement_predicate bipartite_only() {
    return [](const graph& g, const arrangement& a) {
        return is_bipartite_arrangement(g, a);
    };
}

arrangement_predicate exactly_k_thistles(int k) {
    return [k](const graph& g, const arrangement& a) {
        return static_cast<int>(thistle_vertices(g, a).size()) == k;
    };
}

arrangement_predicate thistle_set_is(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return [vertices = std::move(vertices)](const graph& g, const arrangement& a) {
        return thistle_vertices(g, a) == vertices;
    };
}

const char* maximizability_name(maximizability kind) {
    switch (kind) {
    case maximizability::bipartite_only:
        return "bipartite-only";
    case maximizability::both:
        return "both";
    case maximizability::nonbipartite_only:
        return "nonbipartite-only";
    }
    return "?";
}

maximizability_class classify_maximizability(const graph& g, const oracle_options& opts) {
    auto r = brute_maxla(g, opts);
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

} // namespace maxla
