#pragma once

#include "maxla/arrangement.hpp"
#include "maxla/free_tree.hpp"
#include "maxla/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxla {

enum class solve_method {
    bipartite,
    one_thistle,
    two_linear,
    closed_form,
    heuristic,
    branch_and_bound,
    brute_force,
};

const char* method_name(solve_method m);

struct solve_result {
    std::int64_t value = 0;
    arrangement witness;
    solve_method method = solve_method::bipartite;
    bool exact = true; // false when the value is only a lower bound
};

// Best arrangement that places one color class entirely before the other:
// first class sorted by degree non-increasing, second non-decreasing, ties
// by vertex index (counting sort). Works for any connected bipartite graph.
// Every vertex ends with |level| = degree and the level signature is
// non-increasing. Rejects non-bipartite input (odd cycles) with nullopt.
std::optional<solve_result> bipartite_maxla(const graph& g);
solve_result bipartite_maxla(const free_tree& t);

// Best arrangement in which v is the only thistle. Enumerates the 2^deg(v)
// side choices for the components of T - v, arranging each component as a
// maximal bipartite arrangement oriented by its side bit, then merges all
// vertices by level (counting sort, non-increasing, ties by index). Side
// choices where v would not be a thistle, or where v's level does not sit
// strictly between its left neighbors' and right neighbors' levels, are
// skipped. Nullopt when no side choice is valid (e.g. v is a leaf).
std::optional<solve_result> known_thistle_maxla(const free_tree& t, int v);

struct one_thistle_options {
    // Try only the designated internal vertex of each bridge path instead of
    // all of them (their values coincide).
    bool skip_equivalent_bridge_internals = true;
};

// Max of known_thistle_maxla over the potential thistle candidates.
// Nullopt when the tree has no feasible candidate (phi = 0).
std::optional<solve_result> one_thistle_maxla(const free_tree& t,
                                              const one_thistle_options& opts = {});

// Exact solver for trees with exactly two vertices of degree >= 3 (bistars
// included): the better of the maximal bipartite arrangement and the
// one-thistle arrangement at an internal vertex of the hub-to-hub bridge
// (when the bridge has internals). Throws unless the tree has exactly two
// such vertices.
solve_result two_linear_maxla(const free_tree& t);

// n rotations starting from a; after each rotation also evaluates the
// arrangement re-sorted by level (non-increasing, ties by vertex index).
// Returns the best of the 2n+1 candidates; never worse than a.
solve_result rotation_heuristic(const graph& g, const arrangement& a);

// Closed forms.
std::int64_t dmax_path(int n);           // floor(n^2/2) - 1 for n >= 2, 0 for n = 1
std::int64_t dmax_cycle(int n);          // floor(n^2/2), n >= 3
std::int64_t dmax_bistar(int d1, int d2);
std::int64_t dmax_balanced_bistar(int n);
std::int64_t dmax_quasistar(int n, int k);
// Max over all n-vertex trees (attained by the balanced bistar).
std::int64_t dmax_tree_upper(int n);

// Witness matching dmax_cycle(n): odd positions of the cycle first, then the
// even ones, the single level-0 thistle (odd n) in the middle.
arrangement cycle_witness(int n);

enum class solve_mode { exact, fast };

struct bnb_options; // see maxla/bnb.hpp

// Dispatch by shape: paths, stars, bistars, quasistars and spiders are
// bipartite-maximizable; two-linear trees use two_linear_maxla; everything
// else goes to the branch and bound in exact mode. Fast mode returns
// max(bipartite, one-thistle), flagged exact only when the shape guarantees
// it.
solve_result solve(const free_tree& t, solve_mode mode, int threads = 0);

} // namespace maxla
