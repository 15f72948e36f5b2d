#include "maxla/solvers.hpp"

#include "maxla/bnb.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace maxla {

const char* method_name(solve_method m) {
    switch (m) {
    case solve_method::bipartite: return "bipartite";
    case solve_method::one_thistle: return "one-thistle";
    case solve_method::two_linear: return "two-linear";
    case solve_method::closed_form: return "closed-form";
    case solve_method::heuristic: return "heuristic";
    case solve_method::branch_and_bound: return "branch-and-bound";
    case solve_method::brute_force: return "brute-force";
    }
    return "?";
}

namespace {

// Vertices of one color class sorted by degree, ties by index, via bucket
// collection (counting sort).
std::vector<int> by_degree(const graph& g, const bipartition& bp, int color,
                           bool descending) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> bucket(n);
    for (int u = 0; u < n; ++u)
        if (bp.color[u] == color)
            bucket[g.degree(u)].push_back(u);
    std::vector<int> out;
    if (descending) {
        for (int d = n - 1; d >= 0; --d)
            for (int u : bucket[d])
                out.push_back(u);
    } else {
        for (int d = 0; d < n; ++d)
            for (int u : bucket[d])
                out.push_back(u);
    }
    return out;
}

solve_result make_result(const graph& g, arrangement a, solve_method m, bool exact = true) {
    solve_result r;
    r.value = cost(g, a);
    r.witness = std::move(a);
    r.method = m;
    r.exact = exact;
    return r;
}

} // namespace

std::optional<solve_result> bipartite_maxla(const graph& g) {
    bipartition bp;
    if (!try_bipartition(g, bp))
        return std::nullopt;
    int first = g.num_vertices() ? bp.color[0] : 0;
    auto order = by_degree(g, bp, first, /*descending=*/true);
    auto rest = by_degree(g, bp, 1 - first, /*descending=*/false);
    order.insert(order.end(), rest.begin(), rest.end());
    return make_result(g, arrangement(std::move(order)), solve_method::bipartite);
}

solve_result bipartite_maxla(const free_tree& t) {
    return *bipartite_maxla(t.g());
}

std::optional<solve_result> known_thistle_maxla(const free_tree& t, int v) {
    const graph& g = t.g();
    int n = g.num_vertices();
    int d = g.degree(v);
    if (d >= 31)
        throw std::invalid_argument("thistle degree too large for side enumeration");

    // Components of T - v, each identified by the neighbor of v it contains,
    // with a two-coloring relative to that neighbor (color 0 = its side).
    const auto& anchors = g.neighbors(v);
    std::vector<int> comp(n, -1);
    std::vector<signed char> side(n, 0);
    for (int i = 0; i < d; ++i) {
        int start = anchors[i];
        comp[start] = i;
        side[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (w == v || comp[w] >= 0)
                    continue;
                comp[w] = i;
                side[w] = 1 - side[u];
                stack.push_back(w);
            }
        }
    }

    std::vector<int> level(n, 0);
    std::vector<std::vector<int>> bucket(2 * n - 1); // level + (n-1)
    std::optional<solve_result> best;

    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        int ones = __builtin_popcount(mask);
        int lv = 2 * ones - d;
        if (std::abs(lv) == d)
            continue; // v would not be a thistle

        // v's level must sit strictly between the levels of its neighbors
        // placed left (+degree) and right (-degree).
        bool valid = true;
        for (int i = 0; i < d && valid; ++i) {
            int anchor_level = g.degree(anchors[i]);
            if (mask >> i & 1)
                valid = lv > -anchor_level;
            else
                valid = anchor_level > lv;
        }
        if (!valid)
            continue;

        for (int u = 0; u < n; ++u) {
            if (u == v) {
                level[u] = lv;
                continue;
            }
            bool right_of_v = ((mask >> comp[u] & 1) != 0) == (side[u] == 0);
            level[u] = right_of_v ? -g.degree(u) : g.degree(u);
        }

        // Counting sort by level, non-increasing, ties by vertex index.
        for (int u = 0; u < n; ++u)
            bucket[level[u] + n - 1].push_back(u);
        std::vector<int> order;
        order.reserve(n);
        for (int b = 2 * n - 2; b >= 0; --b) {
            for (int u : bucket[b])
                order.push_back(u);
            bucket[b].clear();
        }

        auto cand = make_result(g, arrangement(std::move(order)), solve_method::one_thistle);
        if (!best || cand.value > best->value)
            best = std::move(cand);
    }
    return best;
}

std::optional<solve_result> one_thistle_maxla(const free_tree& t,
                                              const one_thistle_options& opts) {
    auto pot = potential_thistles(t);
    std::vector<int> candidates;
    if (opts.skip_equivalent_bridge_internals) {
        std::vector<signed char> keep(t.num_vertices(), 0);
        for (int u : pot.candidates)
            if (t.degree(u) >= 3)
                keep[u] = 1;
        for (const auto& p : find_branchless_paths(t))
            if (p.is_bridge && p.designated_internal >= 0)
                keep[p.designated_internal] = 1;
        for (int u = 0; u < t.num_vertices(); ++u)
            if (keep[u])
                candidates.push_back(u);
    } else {
        candidates = pot.candidates;
    }

    std::optional<solve_result> best;
    for (int v : candidates) {
        auto r = known_thistle_maxla(t, v);
        if (r && (!best || r->value > best->value))
            best = std::move(r);
    }
    return best;
}

solve_result two_linear_maxla(const free_tree& t) {
    int hubs = 0;
    for (int u = 0; u < t.num_vertices(); ++u)
        if (t.degree(u) >= 3)
            ++hubs;
    if (hubs != 2)
        throw std::invalid_argument("tree does not have exactly two branch vertices");

    auto bip = bipartite_maxla(t);
    bip.method = solve_method::two_linear;

    // The hubs' connecting path is the only bridge; when it has internal
    // vertices, one of them suffices as the thistle candidate.
    for (const auto& p : find_branchless_paths(t)) {
        if (!p.is_bridge || p.designated_internal < 0)
            continue;
        auto thorn = known_thistle_maxla(t, p.designated_internal);
        if (thorn && thorn->value > bip.value) {
            thorn->method = solve_method::two_linear;
            return *thorn;
        }
        break;
    }
    return bip;
}

solve_result rotation_heuristic(const graph& g, const arrangement& a) {
    int n = a.size();
    arrangement best = a;
    std::int64_t best_value = cost(g, a);

    auto consider = [&](const arrangement& cand) {
        std::int64_t value = cost(g, cand);
        if (value > best_value) {
            best_value = value;
            best = cand;
        }
    };

    arrangement cur = a;
    for (int step = 0; step < n; ++step) {
        cur = rotate(cur);
        consider(cur);

        // Same vertices re-sorted by their level in the rotated arrangement.
        auto levels = level_signature(g, cur);
        std::vector<std::vector<int>> bucket(2 * n - 1);
        for (int p = 1; p <= n; ++p)
            bucket[levels[p - 1] + n - 1].push_back(cur.vertex_at(p));
        std::vector<int> order;
        order.reserve(n);
        for (int b = 2 * n - 2; b >= 0; --b) {
            std::sort(bucket[b].begin(), bucket[b].end());
            for (int u : bucket[b])
                order.push_back(u);
        }
        consider(arrangement(std::move(order)));
    }

    solve_result r;
    r.value = best_value;
    r.witness = std::move(best);
    r.method = solve_method::heuristic;
    r.exact = false;
    return r;
}

std::int64_t dmax_path(int n) {
    if (n <= 1)
        return 0;
    return static_cast<std::int64_t>(n) * n / 2 - 1;
}

std::int64_t dmax_cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    return static_cast<std::int64_t>(n) * n / 2;
}

std::int64_t dmax_bistar(int d1, int d2) {
    std::int64_t n = d1 + d2;
    return static_cast<std::int64_t>(d1) * d2 + (n - 1) * (n - 2) / 2;
}

std::int64_t dmax_balanced_bistar(int n) {
    std::int64_t m = n - 1;
    return (3 * m * m + 1 - (n % 2)) / 4;
}

std::int64_t dmax_quasistar(int n, int k) {
    std::int64_t l = n - 1 - 2 * static_cast<std::int64_t>(k);
    if (l < 0)
        throw std::invalid_argument("quasistar needs n >= 2k + 1");
    return (n - 1 - k) * (n + 3 * static_cast<std::int64_t>(k)) / 2;
}

std::int64_t dmax_tree_upper(int n) {
    return dmax_balanced_bistar(n);
}

arrangement cycle_witness(int n) {
    std::vector<int> order;
    order.reserve(n);
    for (int u = 1; u < n; u += 2)
        order.push_back(u);
    for (int u = 0; u < n; u += 2)
        order.push_back(u);
    return arrangement(std::move(order));
}

solve_result solve(const free_tree& t, solve_mode mode, int threads) {
    auto cls = classify(t);
    bool shape_is_exact = cls.shape != tree_shape::generic && cls.shape != tree_shape::k_linear;

    if (mode == solve_mode::exact) {
        switch (cls.shape) {
        case tree_shape::path:
        case tree_shape::star:
        case tree_shape::balanced_bistar:
        case tree_shape::bistar:
        case tree_shape::quasistar:
        case tree_shape::spider:
            return bipartite_maxla(t);
        case tree_shape::two_linear:
            return two_linear_maxla(t);
        case tree_shape::k_linear:
        case tree_shape::generic: {
            bnb_options opts;
            opts.threads = threads;
            opts.collect_witnesses = true;
            opts.witness_cap = 1;
            auto r = bnb_solve(t, opts);
            solve_result out;
            out.value = r.value;
            out.witness = r.witnesses.front();
            out.method = solve_method::branch_and_bound;
            out.exact = true;
            return out;
        }
        }
    }

    auto best = bipartite_maxla(t);
    if (auto thorn = one_thistle_maxla(t); thorn && thorn->value > best.value)
        best = std::move(*thorn);
    best.exact = shape_is_exact;
    return best;
}

} // namespace maxla
