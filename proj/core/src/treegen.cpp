#include "maxla/treegen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace maxla {

namespace {

// AHU-style code of the tree rooted at a fixed vertex: children codes sorted
// and concatenated inside parentheses. Equal strings <=> rooted-isomorphic.
std::string rooted_code(const free_tree& t, int u, int parent) {
    std::vector<std::string> child;
    for (int w : t.neighbors(u))
        if (w != parent)
            child.push_back(rooted_code(t, w, u));
    std::sort(child.begin(), child.end());
    std::string code = "(";
    for (const auto& c : child)
        code += c;
    code += ")";
    return code;
}

graph sequence_to_graph(const std::vector<int>& level) {
    int n = static_cast<int>(level.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::vector<int> last_at(n + 2, -1);
    for (int i = 0; i < n; ++i) {
        if (i > 0)
            edges.emplace_back(last_at[level[i] - 1], i);
        last_at[level[i]] = i;
    }
    return graph(n, std::move(edges));
}

// The generated rooted tree represents its underlying free tree once per
// distinct rooting; keep only the rooting at the centroid (for bicentroidal
// trees, at the centroid whose rooted code is no larger than the other's).
bool canonical_rooting(const free_tree& t) {
    auto c = centroid(t);
    if (std::find(c.begin(), c.end(), 0) == c.end())
        return false;
    if (c.size() == 2) {
        int other = c[0] == 0 ? c[1] : c[0];
        if (rooted_code(t, 0, -1) > rooted_code(t, other, -1))
            return false;
    }
    return true;
}

unsigned __int128 checked_mul(unsigned __int128 a, unsigned __int128 b) {
    unsigned __int128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("rooted tree count exceeds 128 bits");
    return out;
}

unsigned __int128 checked_add(unsigned __int128 a, unsigned __int128 b) {
    unsigned __int128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("rooted tree count exceeds 128 bits");
    return out;
}

unsigned __int128 uniform_below(std::mt19937_64& rng, unsigned __int128 m) {
    if (m <= 1)
        return 0;
    unsigned __int128 rem = ((~static_cast<unsigned __int128>(0)) % m + 1) % m;
    unsigned __int128 x;
    do {
        x = (static_cast<unsigned __int128>(rng()) << 64) | rng();
    } while (rem != 0 && x >= static_cast<unsigned __int128>(0) - rem);
    return x % m;
}

void ranrut(int n, std::mt19937_64& rng, const rooted_tree_counts& r,
            std::vector<std::pair<int, int>>& edges) {
    edges.clear();
    if (n <= 1)
        return;
    if (n == 2) {
        edges.emplace_back(0, 1);
        return;
    }
    // (n-1) r_n = sum over j*d <= n-1 of d * r_d * r_{n-jd}: pick one term.
    unsigned __int128 total =
        checked_mul(static_cast<unsigned __int128>(n - 1), r.count(n));
    unsigned __int128 target = uniform_below(rng, total);
    int pick_j = 0, pick_d = 0;
    for (int j = 1; j <= n - 1 && !pick_j; ++j)
        for (int d = 1; j * d <= n - 1; ++d) {
            unsigned __int128 term = checked_mul(
                checked_mul(static_cast<unsigned __int128>(d), r.count(d)),
                r.count(n - j * d));
            if (target < term) {
                pick_j = j;
                pick_d = d;
                break;
            }
            target -= term;
        }
    std::vector<std::pair<int, int>> trunk, branch;
    ranrut(n - pick_j * pick_d, rng, r, trunk);
    ranrut(pick_d, rng, r, branch);
    edges = std::move(trunk);
    for (int c = 0; c < pick_j; ++c) {
        int base = n - pick_j * pick_d + c * pick_d;
        for (auto [u, v] : branch)
            edges.emplace_back(u + base, v + base);
        edges.emplace_back(0, base);
    }
}

} // namespace

void enumerate_free_trees(int n, const std::function<void(const free_tree&)>& visit) {
    if (n < 1)
        return;
    if (n == 1) {
        visit(free_tree(graph(1, {})));
        return;
    }
    // Canonical level sequences of rooted trees, in decreasing lexicographic
    // order: start from the path, repeatedly flatten the deepest vertex that
    // still sits below level 2 and tile the tail with the segment above it.
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i)
        level[i] = i + 1;
    for (;;) {
        free_tree t(sequence_to_graph(level));
        if (canonical_rooting(t))
            visit(t);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[i] > 2) {
                p = i;
                break;
            }
        if (p < 0)
            break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i)
            level[i] = level[i - (p - q)];
    }
}

std::vector<free_tree> all_free_trees(int n) {
    std::vector<free_tree> out;
    enumerate_free_trees(n, [&](const free_tree& t) { out.push_back(t); });
    return out;
}

std::int64_t count_free_trees(int n) {
    std::int64_t count = 0;
    enumerate_free_trees(n, [&](const free_tree&) { ++count; });
    return count;
}

rooted_tree_counts::rooted_tree_counts(int max_n) {
    if (max_n < 1)
        max_n = 1;
    r_.assign(max_n + 1, 0);
    r_[1] = 1;
    for (int n = 2; n <= max_n; ++n) {
        unsigned __int128 acc = 0;
        for (int k = 1; k <= n - 1; ++k) {
            unsigned __int128 s = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0)
                    s = checked_add(s, checked_mul(static_cast<unsigned __int128>(d), r_[d]));
            acc = checked_add(acc, checked_mul(s, r_[n - k]));
        }
        r_[n] = acc / (n - 1);
    }
}

graph sample_rooted_tree(int n, std::mt19937_64& rng, const rooted_tree_counts& counts) {
    if (n < 1)
        throw std::invalid_argument("tree size must be positive");
    if (counts.max_n() < n)
        throw std::invalid_argument("rooted tree counts table is too small");
    std::vector<std::pair<int, int>> edges;
    ranrut(n, rng, counts, edges);
    return graph(n, std::move(edges));
}

free_tree sample_free_tree(int n, std::mt19937_64& rng, const rooted_tree_counts& counts) {
    for (;;) {
        free_tree t(sample_rooted_tree(n, rng, counts));
        int orbits = vertex_orbits(t).count;
        if (orbits == 1 || uniform_below(rng, static_cast<unsigned __int128>(orbits)) == 0)
            return t;
    }
}

free_tree sample_free_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    rooted_tree_counts counts(n);
    return sample_free_tree(n, rng, counts);
}

std::string format_tree_line(const free_tree& t) {
    std::string out;
    bool first = true;
    for (auto [u, v] : t.g().edges()) {
        if (!first)
            out += ';';
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        first = false;
    }
    return out;
}

free_tree parse_tree_line(const std::string& line) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = 0;
    std::string field;
    std::istringstream split(line);
    while (std::getline(split, field, ';')) {
        std::istringstream pair(field);
        int u, v;
        if (!(pair >> u >> v))
            throw parse_error(1, "malformed edge '" + field + "' in tree line");
        std::string rest;
        if (pair >> rest)
            throw parse_error(1, "trailing tokens after edge '" + field + "'");
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (edges.empty())
        return free_tree(graph(1, {}));
    return free_tree(graph(max_vertex + 1, std::move(edges)));
}

} // namespace maxla
