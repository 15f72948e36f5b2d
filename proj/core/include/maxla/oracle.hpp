#pragma once

#include "maxla/arrangement.hpp"
#include "maxla/free_tree.hpp"
#include "maxla/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace maxla {

struct oracle_options {
    // Enumerate only arrangements with vertex_at(1) < vertex_at(n); every
    // arrangement is cost-equivalent to its mirror, so this halves the work
    // without changing values or classifications.
    bool halve_by_mirror = true;
    int witness_cap = 64;
};

struct oracle_result {
    std::int64_t value = 0;
    std::vector<arrangement> witnesses; // one per level-isomorphism class
    std::int64_t maxima_count = 0;      // arrangements attaining the value

    bool has_bipartite_maximum = false;
    bool has_nonbipartite_maximum = false;
    int min_thistles = 0;               // over all maxima
    bool one_thistle_maximum = false;
};

// Exhaustive n! sweep. Intended for n <= 10.
oracle_result brute_maxla(const graph& g, const oracle_options& opts = {});

// Same sweep restricted to arrangements satisfying a predicate; nullopt when
// none does.
using arrangement_predicate = std::function<bool(const graph&, const arrangement&)>;

std::optional<oracle_result> brute_restricted(const graph& g,
                                              const arrangement_predicate& keep,
                                              const oracle_options& opts = {});

arrangement_predicate bipartite_only();
arrangement_predicate exactly_k_thistles(int k);
arrangement_predicate thistle_set_is(std::vector<int> vertices);

enum class maximizability { bipartite_only, both, nonbipartite_only };

struct maximizability_class {
    maximizability kind = maximizability::bipartite_only;
    int min_thistles = 0;
    bool one_thistle_solves = false; // some maximum has exactly one thistle
};

const char* maximizability_name(maximizability m);

// Classification by exhaustive enumeration.
maximizability_class classify_maximizability(const graph& g,
                                             const oracle_options& opts = {});

} // namespace maxla
