#pragma once

#include "maxla/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace maxla {

// Bijection between vertices 0..n-1 and positions 1..n.
class arrangement {
public:
    arrangement() = default;
    // order[i] is the vertex at position i+1.
    explicit arrangement(std::vector<int> order);

    static arrangement identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    int position(int v) const { return pos_[v]; }          // 1-based
    int vertex_at(int p) const { return order_[p - 1]; }   // p in 1..n
    const std::vector<int>& order() const { return order_; }

    bool operator==(const arrangement& other) const { return order_ == other.order_; }

private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

// Text format: a single line of 0-based vertex ids, position 1 first.
arrangement parse_arrangement(const std::string& line, int n);
std::string format_arrangement(const arrangement& a);

// Sum of |pos(u) - pos(v)| over the edges.
std::int64_t cost(const graph& g, const arrangement& a);

// level[p-1] = right-degree minus left-degree of the vertex at position p.
std::vector<int> level_signature(const graph& g, const arrangement& a);

// cut[p-1] = number of edges crossing the gap between positions p and p+1,
// for p = 1..n-1. Cuts are the prefix sums of the levels, and their total
// equals the cost.
std::vector<int> cut_signature(const graph& g, const arrangement& a);

int level_of(const graph& g, const arrangement& a, int v);

// A thistle is a vertex with |level| < degree, i.e. with neighbors on both
// sides.
bool is_thistle(const graph& g, const arrangement& a, int v);
std::vector<int> thistle_vertices(const graph& g, const arrangement& a);

// No thistles at all: one side of the bipartition entirely precedes the
// other.
bool is_bipartite_arrangement(const graph& g, const arrangement& a);

// Reverse the positions. Levels negate and reverse; cuts reverse; cost is
// preserved.
arrangement mirror(const arrangement& a);

// Move the vertex at position 1 to position n, shifting everyone left.
arrangement rotate(const arrangement& a);

// Equal positional edge sets, directly or against the mirror.
bool edge_isomorphic(const graph& g, const arrangement& a, const arrangement& b);

// Equal level signatures, directly or against the mirror (in which case the
// signature negates and reverses). Implied by edge isomorphism; implies
// equal cost.
bool level_isomorphic(const graph& g, const arrangement& a, const arrangement& b);

// Effect of swapping the vertices at positions i < j, predicted from the
// original arrangement without performing the swap. Level deltas are zero
// outside positions [i, j]; cut deltas are zero outside [i, j).
struct swap_delta {
    std::vector<std::int64_t> level_delta; // by vertex
    std::vector<std::int64_t> cut_delta;   // cut_delta[p-1] for p = 1..n-1
    std::int64_t cost_delta = 0;
};

swap_delta swap_deltas(const graph& g, const arrangement& a, int i, int j);

// The arrangement with positions i and j exchanged.
arrangement apply_swap(const arrangement& a, int i, int j);

} // namespace maxla
