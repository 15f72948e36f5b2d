#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxla {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph on vertices 0..n-1. No self loops, no parallel
// edges. Adjacency lists are kept sorted so that iteration order is
// deterministic everywhere.
class graph {
public:
    graph() = default;
    graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    bool is_connected() const;
    bool is_tree() const;

    static graph path(int n);
    static graph cycle(int n);
    static graph star(int n);
    static graph bistar(int d1, int d2);
    // Star with max(k, ...) edges subdivided once: center of degree k + l,
    // k legs of length two and l legs of length one. n = 2k + l + 1.
    static graph quasistar(int k, int l);
    static graph spider(const std::vector<int>& leg_lengths);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Text format: one "u v" pair per line, 0-based. An optional header line
// "n <count>" pins the vertex count (otherwise it is 1 + max index seen).
// Lines starting with '#' are comments; "# label <name> <index>" registers
// a symbolic vertex name usable in later edge lines.
graph parse_edge_list(std::istream& in);
graph parse_edge_list(const std::string& text);
graph load_edge_list(const std::string& path);

std::string format_edge_list(const graph& g);

// Two-coloring of a connected bipartite graph; color[u] is 0 or 1 with
// color 0 assigned to vertex 0's side. Empty result if an odd cycle exists.
struct bipartition {
    std::vector<signed char> color;
    int count[2] = {0, 0};
};

bool try_bipartition(const graph& g, bipartition& out);

} // namespace maxla
