#include "maxla/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace maxla {

arrangement::arrangement(std::vector<int> order) : order_(std::move(order)) {
    int n = static_cast<int>(order_.size());
    pos_.assign(n, 0);
    std::vector<signed char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = order_[i];
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("arrangement is not a permutation of 0..n-1");
        seen[v] = 1;
        pos_[v] = i + 1;
    }
}

arrangement arrangement::identity(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return arrangement(std::move(order));
}

arrangement parse_arrangement(const std::string& line, int n) {
    std::istringstream ss(line);
    std::vector<int> order;
    int v;
    while (ss >> v)
        order.push_back(v);
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " vertex ids, got " +
                                    std::to_string(order.size()));
    return arrangement(std::move(order));
}

std::string format_arrangement(const arrangement& a) {
    std::ostringstream out;
    for (int i = 0; i < a.size(); ++i) {
        if (i)
            out << ' ';
        out << a.order()[i];
    }
    return out.str();
}

std::int64_t cost(const graph& g, const arrangement& a) {
    std::int64_t total = 0;
    for (const auto& [u, v] : g.edges())
        total += std::abs(a.position(u) - a.position(v));
    return total;
}

int level_of(const graph& g, const arrangement& a, int v) {
    int level = 0;
    for (int w : g.neighbors(v))
        level += a.position(w) > a.position(v) ? 1 : -1;
    return level;
}

std::vector<int> level_signature(const graph& g, const arrangement& a) {
    int n = a.size();
    std::vector<int> levels(n);
    for (int p = 1; p <= n; ++p)
        levels[p - 1] = level_of(g, a, a.vertex_at(p));
    return levels;
}

std::vector<int> cut_signature(const graph& g, const arrangement& a) {
    auto levels = level_signature(g, a);
    std::vector<int> cuts(std::max(0, a.size() - 1));
    int running = 0;
    for (size_t p = 0; p < cuts.size(); ++p) {
        running += levels[p];
        cuts[p] = running;
    }
    return cuts;
}

bool is_thistle(const graph& g, const arrangement& a, int v) {
    return std::abs(level_of(g, a, v)) < g.degree(v);
}

std::vector<int> thistle_vertices(const graph& g, const arrangement& a) {
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (is_thistle(g, a, v))
            out.push_back(v);
    return out;
}

bool is_bipartite_arrangement(const graph& g, const arrangement& a) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (is_thistle(g, a, v))
            return false;
    return true;
}

arrangement mirror(const arrangement& a) {
    std::vector<int> order(a.order().rbegin(), a.order().rend());
    return arrangement(std::move(order));
}

arrangement rotate(const arrangement& a) {
    if (a.size() == 0)
        return a;
    std::vector<int> order(a.order().begin() + 1, a.order().end());
    order.push_back(a.order().front());
    return arrangement(std::move(order));
}

namespace {

std::vector<std::pair<int, int>> positional_edges(const graph& g, const arrangement& a) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.num_edges());
    for (const auto& [u, v] : g.edges()) {
        int p = a.position(u), q = a.position(v);
        out.emplace_back(std::min(p, q), std::max(p, q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool edge_isomorphic(const graph& g, const arrangement& a, const arrangement& b) {
    auto ea = positional_edges(g, a);
    auto eb = positional_edges(g, b);
    if (ea == eb)
        return true;
    int n = a.size();
    for (auto& [p, q] : eb) {
        int np = n + 1 - q, nq = n + 1 - p;
        p = np;
        q = nq;
    }
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

bool level_isomorphic(const graph& g, const arrangement& a, const arrangement& b) {
    auto la = level_signature(g, a);
    auto lb = level_signature(g, b);
    if (la == lb)
        return true;
    std::reverse(lb.begin(), lb.end());
    for (int& x : lb)
        x = -x;
    return la == lb;
}

swap_delta swap_deltas(const graph& g, const arrangement& a, int i, int j) {
    if (i >= j)
        throw std::invalid_argument("swap positions must satisfy i < j");
    int n = a.size();
    int v = a.vertex_at(i), w = a.vertex_at(j);
    bool adjacent = g.has_edge(v, w);

    // Neighbors of v and w strictly inside the open position interval (i, j).
    auto inside_count = [&](int u) {
        int c = 0;
        for (int x : g.neighbors(u)) {
            int p = a.position(x);
            if (p > i && p < j)
                ++c;
        }
        return c;
    };
    int v_inside = inside_count(v);
    int w_inside = inside_count(w);

    swap_delta d;
    d.level_delta.assign(n, 0);
    d.level_delta[w] = 2 * (w_inside + (adjacent ? 1 : 0));
    d.level_delta[v] = -2 * (v_inside + (adjacent ? 1 : 0));
    for (int p = i + 1; p < j; ++p) {
        int u = a.vertex_at(p);
        int av = g.has_edge(v, u) ? 1 : 0;
        int aw = g.has_edge(w, u) ? 1 : 0;
        d.level_delta[u] = 2 * (av - aw);
    }

    // Cut deltas: zero outside [i, j). Inside, the running difference of
    // prefix neighbor counts of v and w over positions (i, k] shifts each cut.
    d.cut_delta.assign(std::max(0, n - 1), 0);
    int lv = level_of(g, a, v), lw = level_of(g, a, w);
    int base = lw - lv + 2 * ((adjacent ? 1 : 0) + w_inside);
    int v_run = 0, w_run = 0; // neighbors in (i, k]
    for (int k = i; k < j; ++k) {
        if (k > i) {
            int u = a.vertex_at(k);
            if (g.has_edge(v, u))
                ++v_run;
            if (g.has_edge(w, u))
                ++w_run;
        }
        d.cut_delta[k - 1] = base + 2 * (v_run - w_run);
    }

    for (std::int64_t c : d.cut_delta)
        d.cost_delta += c;
    return d;
}

arrangement apply_swap(const arrangement& a, int i, int j) {
    auto order = a.order();
    std::swap(order[i - 1], order[j - 1]);
    return arrangement(std::move(order));
}

} // namespace maxla
