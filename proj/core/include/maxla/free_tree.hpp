#pragma once

#include "maxla/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxla {

// A connected acyclic graph, immutable after construction. Degree and
// per-vertex leaf lists are cached eagerly; everything else is computed by
// free functions so the type stays cheap to copy.
class free_tree {
public:
    explicit free_tree(graph g);

    const graph& g() const { return g_; }
    int num_vertices() const { return g_.num_vertices(); }
    int degree(int u) const { return g_.degree(u); }
    const std::vector<int>& neighbors(int u) const { return g_.neighbors(u); }
    // Leaves adjacent to u, ascending.
    const std::vector<int>& leaves_of(int u) const { return leaves_of_[u]; }

private:
    graph g_;
    std::vector<std::vector<int>> leaves_of_;
};

// Maximal path u1..uk whose internal vertices all have degree exactly 2 and
// whose endpoints do not. A bridge path has both endpoint degrees >= 3.
struct branchless_path {
    std::vector<int> vertices; // endpoint, internals in order, endpoint
    bool is_bridge = false;
    // Smallest-index internal vertex; -1 when the path has no internals.
    int designated_internal = -1;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int internal_count() const { return std::max(0, static_cast<int>(vertices.size()) - 2); }
};

// Every edge of the tree lies on exactly one branchless path. Paths are
// reported with endpoints ordered (smaller index first) and sorted by their
// first vertex. A single-vertex tree yields no paths.
std::vector<branchless_path> find_branchless_paths(const free_tree& t);

// Candidate thistle vertices for the one-thistle search: all vertices of
// degree >= 3 plus every internal vertex of every bridge path. phi counts
// degree->=3 vertices plus bridge paths (one representative each).
struct potential_thistles_result {
    std::vector<int> candidates;          // ascending
    std::vector<signed char> is_candidate;
    int phi = 0;
};

potential_thistles_result potential_thistles(const free_tree& t);

enum class tree_shape {
    path,
    star,
    balanced_bistar,
    bistar,
    quasistar,
    spider,
    two_linear,
    k_linear,
    generic,
};

struct tree_class {
    tree_shape shape = tree_shape::generic;
    // bistar: hub degrees d1 >= d2. quasistar: k subdivided legs, l plain
    // leaves. two_linear / k_linear: hub count in k; two_linear also reports
    // the bridge length (edges between the two hubs).
    int d1 = 0, d2 = 0;
    int k = 0, l = 0;
    int bridge_length = 0;
};

// Most specific shape first: path, star, balanced bistar, bistar, quasistar,
// spider, two-linear, k-linear (all hubs on one path), generic.
tree_class classify(const free_tree& t);

const char* shape_name(tree_shape s);

// Centroid: one or two vertices minimizing the largest component of T - v.
std::vector<int> centroid(const free_tree& t);

// Canonical form: AHU-style code of the tree rooted at its centroid; for
// bicentroidal trees the lexicographically smaller of the two rootings.
// Equal strings <=> isomorphic trees.
std::string canonical_code(const free_tree& t);

// Automorphism orbit partition. orbit[u] == orbit[v] iff some automorphism
// maps u to v. Orbit ids are dense, numbered by smallest member.
struct orbit_partition {
    std::vector<int> orbit;
    std::vector<int> representatives; // smallest vertex of each orbit, ascending
    int count = 0;
};

orbit_partition vertex_orbits(const free_tree& t);

// View of the tree rooted at a chosen vertex: parent links plus a dense
// id per vertex identifying the isomorphism class of its hanging subtree.
// Two same-parent vertices are interchangeable siblings iff their subtree
// ids match.
struct rooted_view {
    int root = 0;
    std::vector<int> parent;      // parent[root] == -1
    std::vector<int> subtree_id;
    std::vector<int> order;       // vertices in BFS order from the root
};

rooted_view root_tree(const free_tree& t, int root);

// True iff u and v share a parent under the given view and their hanging
// subtrees are isomorphic.
bool isomorphic_siblings(const rooted_view& view, int u, int v);

} // namespace maxla
