#include "maxla/free_tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace maxla {

free_tree::free_tree(graph g) : g_(std::move(g)) {
    if (!g_.is_tree())
        throw std::invalid_argument("graph is not a tree");
    int n = g_.num_vertices();
    leaves_of_.resize(n);
    for (int u = 0; u < n; ++u)
        for (int w : g_.neighbors(u))
            if (g_.degree(w) == 1)
                leaves_of_[u].push_back(w);
}

std::vector<branchless_path> find_branchless_paths(const free_tree& t) {
    int n = t.num_vertices();
    std::vector<branchless_path> paths;
    if (n < 2)
        return paths;
    for (int u = 0; u < n; ++u) {
        if (t.degree(u) == 2)
            continue;
        for (int first : t.neighbors(u)) {
            std::vector<int> verts{u};
            int prev = u, cur = first;
            while (t.degree(cur) == 2) {
                verts.push_back(cur);
                int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                                       : t.neighbors(cur)[0];
                prev = cur;
                cur = next;
            }
            verts.push_back(cur);
            if (u > cur)
                continue; // seen from the other endpoint
            branchless_path p;
            p.vertices = std::move(verts);
            p.is_bridge = t.degree(u) >= 3 && t.degree(cur) >= 3;
            if (p.internal_count() > 0)
                p.designated_internal =
                    *std::min_element(p.vertices.begin() + 1, p.vertices.end() - 1);
            paths.push_back(std::move(p));
        }
    }
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        return a.vertices.front() != b.vertices.front()
                   ? a.vertices.front() < b.vertices.front()
                   : a.vertices.back() < b.vertices.back();
    });
    return paths;
}

potential_thistles_result potential_thistles(const free_tree& t) {
    int n = t.num_vertices();
    potential_thistles_result out;
    out.is_candidate.assign(n, 0);
    for (int u = 0; u < n; ++u)
        if (t.degree(u) >= 3) {
            out.is_candidate[u] = 1;
            ++out.phi;
        }
    for (const auto& p : find_branchless_paths(t)) {
        // A bridge with no internal vertices carries no potential thistle:
        // its endpoints are already counted as degree->=3 vertices.
        if (!p.is_bridge || p.internal_count() == 0)
            continue;
        ++out.phi;
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
            out.is_candidate[p.vertices[i]] = 1;
    }
    for (int u = 0; u < n; ++u)
        if (out.is_candidate[u])
            out.candidates.push_back(u);
    return out;
}

namespace {

std::vector<int> path_between(const free_tree& t, int a, int b) {
    int n = t.num_vertices();
    std::vector<int> parent(n, -2);
    std::queue<int> q;
    q.push(a);
    parent[a] = -1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == b)
            break;
        for (int w : t.neighbors(u))
            if (parent[w] == -2) {
                parent[w] = u;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int u = b; u != -1; u = parent[u])
        path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

tree_class classify(const free_tree& t) {
    int n = t.num_vertices();
    tree_class c;

    std::vector<int> hubs;
    for (int u = 0; u < n; ++u)
        if (t.degree(u) >= 3)
            hubs.push_back(u);

    if (hubs.empty()) {
        c.shape = tree_shape::path;
        return c;
    }

    if (hubs.size() == 1) {
        int hub = hubs[0];
        if (t.degree(hub) == n - 1) {
            c.shape = tree_shape::star;
            c.d1 = n - 1;
            c.d2 = 1;
            return c;
        }
        // Bistar: every non-hub vertex is a leaf on one of two adjacent
        // centers. With a single hub the second center has degree 2.
        // Quasistar: legs of length one or two from the hub.
        bool quasistar = true;
        int k = 0, l = static_cast<int>(t.leaves_of(hub).size());
        for (int u = 0; u < n; ++u) {
            if (u == hub || t.degree(u) == 1)
                continue;
            if (t.degree(u) != 2 || !t.g().has_edge(u, hub) ||
                t.leaves_of(u).empty()) {
                quasistar = false;
                break;
            }
            ++k;
        }
        if (quasistar) {
            c.shape = tree_shape::quasistar;
            c.k = k;
            c.l = l;
            return c;
        }
        c.shape = tree_shape::spider;
        c.k = 1;
        return c;
    }

    if (hubs.size() == 2) {
        // Two adjacent centers covering all other vertices as leaves form a
        // bistar; otherwise any 2-hub tree is two-linear.
        int h1 = hubs[0], h2 = hubs[1];
        if (t.g().has_edge(h1, h2) &&
            static_cast<int>(t.leaves_of(h1).size() + t.leaves_of(h2).size()) == n - 2) {
            int d1 = t.degree(h1), d2 = t.degree(h2);
            if (d1 < d2)
                std::swap(d1, d2);
            c.shape = std::abs(d1 - d2) <= 1 ? tree_shape::balanced_bistar
                                             : tree_shape::bistar;
            c.d1 = d1;
            c.d2 = d2;
            return c;
        }
        c.shape = tree_shape::two_linear;
        c.k = 2;
        c.bridge_length = static_cast<int>(path_between(t, h1, h2).size()) - 1;
        return c;
    }

    // All hubs on a single path? Find the two extremal hubs and check.
    auto farthest_hub = [&](int from) {
        auto dist = [&](int s) {
            std::vector<int> d(n, -1);
            std::queue<int> q;
            q.push(s);
            d[s] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : t.neighbors(u))
                    if (d[w] < 0) {
                        d[w] = d[u] + 1;
                        q.push(w);
                    }
            }
            return d;
        };
        auto d = dist(from);
        int best = from;
        for (int h : hubs)
            if (d[h] > d[best])
                best = h;
        return best;
    };
    int a = farthest_hub(hubs[0]);
    int b = farthest_hub(a);
    auto spine = path_between(t, a, b);
    std::vector<signed char> on_spine(n, 0);
    for (int u : spine)
        on_spine[u] = 1;
    bool linear = std::all_of(hubs.begin(), hubs.end(),
                              [&](int h) { return on_spine[h]; });
    if (linear) {
        c.shape = tree_shape::k_linear;
        c.k = static_cast<int>(hubs.size());
        return c;
    }
    c.shape = tree_shape::generic;
    return c;
}

const char* shape_name(tree_shape s) {
    switch (s) {
    case tree_shape::path: return "path";
    case tree_shape::star: return "star";
    case tree_shape::balanced_bistar: return "balanced-bistar";
    case tree_shape::bistar: return "bistar";
    case tree_shape::quasistar: return "quasistar";
    case tree_shape::spider: return "spider";
    case tree_shape::two_linear: return "two-linear";
    case tree_shape::k_linear: return "k-linear";
    case tree_shape::generic: return "generic";
    }
    return "?";
}

std::vector<int> centroid(const free_tree& t) {
    int n = t.num_vertices();
    if (n == 1)
        return {0};
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int w : t.neighbors(u))
            if (w != parent[u]) {
                parent[w] = u;
                order.push_back(w);
            }
    }
    for (size_t i = order.size(); i-- > 1;)
        size[parent[order[i]]] += size[order[i]];
    std::vector<int> result;
    for (int u = 0; u < n; ++u) {
        int largest = n - size[u];
        for (int w : t.neighbors(u))
            if (w != parent[u])
                largest = std::max(largest, size[w]);
        if (largest <= n / 2)
            result.push_back(u);
    }
    return result;
}

namespace {

// AHU code of the subtree hanging from v away from its parent:
// "(" + concatenation of children codes, sorted + ")".
std::string subtree_code(const free_tree& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : t.neighbors(v))
        if (w != parent)
            child_codes.push_back(subtree_code(t, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes)
        code += c;
    code += ")";
    return code;
}

} // namespace

std::string canonical_code(const free_tree& t) {
    auto centers = centroid(t);
    std::string code = subtree_code(t, centers[0], -1);
    if (centers.size() == 2)
        code = std::min(code, subtree_code(t, centers[1], -1));
    return code;
}

orbit_partition vertex_orbits(const free_tree& t) {
    int n = t.num_vertices();
    auto centers = centroid(t);

    // Parent links toward the centroid (a virtual root joins a bicentroid, so
    // each center blocks the other; centers themselves keep parent -1).
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    for (int c : centers)
        order.push_back(c);
    auto toward_root = [&](int u) {
        if (centers.size() == 2) {
            if (u == centers[0])
                return centers[1];
            if (u == centers[1])
                return centers[0];
        }
        return parent[u];
    };
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        int up = toward_root(u);
        for (int w : t.neighbors(u))
            if (w != up) {
                parent[w] = u;
                order.push_back(w);
            }
    }

    // Subtree codes away from the parent, then top-down refinement: same
    // orbit <=> same parent orbit and same subtree code.
    std::vector<std::string> code(n);
    for (size_t i = order.size(); i-- > 0;) {
        int u = order[i];
        int up = toward_root(u);
        std::vector<std::string> child_codes;
        for (int w : t.neighbors(u))
            if (w != up)
                child_codes.push_back(code[w]);
        std::sort(child_codes.begin(), child_codes.end());
        code[u] = "(";
        for (const auto& c : child_codes)
            code[u] += c;
        code[u] += ")";
    }

    std::vector<int> raw(n, -1);
    std::map<std::pair<int, std::string>, int> seen;
    int next_id = 0;
    for (int u : order) {
        int parent_orbit = parent[u] >= 0 ? raw[parent[u]] : -1;
        auto key = std::make_pair(parent_orbit, code[u]);
        auto [it, inserted] = seen.emplace(key, next_id);
        if (inserted)
            ++next_id;
        raw[u] = it->second;
    }

    orbit_partition out;
    out.orbit.assign(n, -1);
    std::vector<int> renumber(next_id, -1);
    for (int u = 0; u < n; ++u) {
        if (renumber[raw[u]] < 0) {
            renumber[raw[u]] = out.count++;
            out.representatives.push_back(u);
        }
        out.orbit[u] = renumber[raw[u]];
    }
    return out;
}

rooted_view root_tree(const free_tree& t, int root) {
    int n = t.num_vertices();
    rooted_view view;
    view.root = root;
    view.parent.assign(n, -1);
    view.order.reserve(n);
    view.order.push_back(root);
    for (size_t i = 0; i < view.order.size(); ++i) {
        int u = view.order[i];
        for (int w : t.neighbors(u))
            if (w != view.parent[u]) {
                view.parent[w] = u;
                view.order.push_back(w);
            }
    }

    std::vector<std::string> code(n);
    for (size_t i = view.order.size(); i-- > 0;) {
        int u = view.order[i];
        std::vector<std::string> child_codes;
        for (int w : t.neighbors(u))
            if (w != view.parent[u])
                child_codes.push_back(code[w]);
        std::sort(child_codes.begin(), child_codes.end());
        code[u] = "(";
        for (const auto& c : child_codes)
            code[u] += c;
        code[u] += ")";
    }

    view.subtree_id.assign(n, -1);
    std::map<std::string, int> ids;
    for (int u = 0; u < n; ++u) {
        auto [it, inserted] = ids.emplace(code[u], static_cast<int>(ids.size()));
        view.subtree_id[u] = it->second;
    }
    return view;
}

bool isomorphic_siblings(const rooted_view& view, int u, int v) {
    return u != v && view.parent[u] == view.parent[v] && view.parent[u] != -1 &&
           view.subtree_id[u] == view.subtree_id[v];
}

} // namespace maxla
