#pragma once

#include "maxla/arrangement.hpp"
#include "maxla/free_tree.hpp"
#include "maxla/solvers.hpp"

#include <cstdint>
#include <vector>

namespace maxla {

// Set over a fixed universe 0..capacity-1 with O(1) add, remove and
// membership, backed by three arrays (member list, position of each key in
// the list, size). Removal swaps with the last member, so iteration order is
// not sorted; it is deterministic for a given operation history.
class linear_set {
public:
    linear_set() = default;
    explicit linear_set(int capacity);

    void add(int key);
    void remove(int key);
    bool contains(int key) const { return where_[key] >= 0; }
    int size() const { return size_; }
    int member(int i) const { return members_[i]; }

private:
    std::vector<int> members_;
    std::vector<int> where_;
    int size_ = 0;
};

// Edge keys for linear_set over edges: smaller endpoint u, larger v -> v*n+u.
inline int edge_key(int u, int v, int n) {
    return u < v ? v * n + u : u * n + v;
}

struct bnb_options {
    int threads = 1;                 // 0 = hardware concurrency
    int witness_cap = 64;            // max stored witness classes
    bool collect_witnesses = true;

    // Pruning / symmetry toggles. Disabling any of them must not change the
    // returned value or classification, only the work done.
    bool prop2_level_order = true;        // non-increasing level signature
    bool prop3_neighbor_levels = true;    // no equal-level adjacent pair
    bool path_rule = true;                // branchless path thistle limits
    bool unassigned_neighbor_rule = true; // forced-level neighbor check
    bool upper_bound = true;
    bool special_case_completion = true;  // finish combinatorially when no
                                          // suffix-suffix edges remain
    bool bipartite_prefix_prune = true;   // prune forced-bipartite prefixes
    bool symmetry_root_orbits = true;     // one search root per orbit
    bool symmetry_leaf_order = true;      // leaves of a vertex by index
    bool symmetry_equal_level_order = true;
    bool symmetry_sibling_order = true;   // isomorphic siblings by index

    // Literal reading of the unassigned-neighbor check: reject on the
    // neighbor's best possible future level rather than its forced level.
    // Off by default; can prune optimal arrangements.
    bool aggressive_neighbor_rule = false;

    // Completed-arrangement filter requiring a cut of at least (n^2-1)/2.
    // Unsatisfiable for trees; kept for experimentation only.
    bool largest_cut_check = false;
};

struct bnb_stats {
    std::int64_t expansions = 0;     // vertices placed
    std::int64_t bound_prunes = 0;
    std::int64_t constraint_rejects = 0;
    std::int64_t special_case_hits = 0;
};

struct bnb_result {
    std::int64_t value = 0;
    // One representative per level-isomorphism class among the maxima found
    // (the maximal bipartite arrangement included when it ties), capped at
    // witness_cap.
    std::vector<arrangement> witnesses;

    bool has_bipartite_maximum = false;
    bool has_nonbipartite_maximum = false;
    // Minimum thistle count over all maximum arrangements (0 when bipartite
    // maxima exist); tracked over every maximum encountered, independent of
    // the witness cap.
    int min_thistles = 0;
    bool one_thistle_maximum = false; // some maximum has exactly one thistle

    std::int64_t bipartite_value = 0;
    bnb_stats stats;
};

// Exact search over arrangements, seeded with the maximal bipartite
// arrangement. Explores only prefixes that can still become a maximum
// non-bipartite arrangement (necessary conditions for maxima: non-increasing
// levels, no equal-level neighbors, branchless-path thistle limits) and
// breaks symmetries so that exactly one member of each edge-isomorphic /
// equal-level-permuted family is enumerated. Roots are processed in
// parallel when threads != 1; results are merged deterministically.
bnb_result bnb_solve(const free_tree& t, const bnb_options& opts = {});

} // namespace maxla
