#pragma once

#include "maxla/free_tree.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace maxla {

// Enumeration of unlabeled free trees on n vertices, one canonical
// representative per isomorphism class: canonical level-sequence successor
// generation over rooted trees, filtered to the centroid-canonical rooting.
// Vertices are numbered in the preorder of the canonical sequence, so the
// output is deterministic.
void enumerate_free_trees(int n, const std::function<void(const free_tree&)>& visit);
std::vector<free_tree> all_free_trees(int n);
std::int64_t count_free_trees(int n);

// Number of unlabeled rooted trees per vertex count, exact (128-bit).
class rooted_tree_counts {
public:
    explicit rooted_tree_counts(int max_n);
    unsigned __int128 count(int n) const { return r_[n]; }
    int max_n() const { return static_cast<int>(r_.size()) - 1; }

private:
    std::vector<unsigned __int128> r_;
};

// Uniform random unlabeled rooted tree (classical recurrence sampler).
graph sample_rooted_tree(int n, std::mt19937_64& rng, const rooted_tree_counts& counts);

// Uniform random unlabeled free tree: sample a rooted tree, then accept with
// probability 1/(orbit count of the underlying free tree), which cancels the
// number of distinct rootings. Deterministic for a fixed seed.
free_tree sample_free_tree(int n, std::mt19937_64& rng, const rooted_tree_counts& counts);
free_tree sample_free_tree(int n, std::uint64_t seed);

// Spill format: one tree per line, semicolon-separated edges "u v;u v;...".
std::string format_tree_line(const free_tree& t);
free_tree parse_tree_line(const std::string& line);

} // namespace maxla
