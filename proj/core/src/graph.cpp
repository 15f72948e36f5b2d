#include "maxla/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace maxla {

graph::graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.resize(n_);
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self loop");
        if (u > v)
            std::swap(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("duplicate edge");
    }
    std::sort(edges_.begin(), edges_.end());
}

int graph::max_degree() const {
    int best = 0;
    for (int u = 0; u < n_; ++u)
        best = std::max(best, degree(u));
    return best;
}

bool graph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool graph::is_connected() const {
    if (n_ == 0)
        return false;
    std::vector<signed char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

bool graph::is_tree() const {
    return num_edges() == n_ - 1 && is_connected();
}

graph graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return graph(n, std::move(e));
}

graph graph::cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return graph(n, std::move(e));
}

graph graph::star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(0, i);
    return graph(n, std::move(e));
}

graph graph::bistar(int d1, int d2) {
    if (d1 < 1 || d2 < 1)
        throw std::invalid_argument("bistar hub degrees must be positive");
    // Hubs 0 and 1 adjacent to each other; d1-1 leaves on hub 0, d2-1 on hub 1.
    int n = d1 + d2;
    std::vector<std::pair<int, int>> e{{0, 1}};
    int next = 2;
    for (int i = 0; i < d1 - 1; ++i)
        e.emplace_back(0, next++);
    for (int i = 0; i < d2 - 1; ++i)
        e.emplace_back(1, next++);
    return graph(n, std::move(e));
}

graph graph::quasistar(int k, int l) {
    if (k < 0 || l < 0 || k + l < 1)
        throw std::invalid_argument("quasistar needs k + l >= 1");
    int n = 2 * k + l + 1;
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(0, next);
        e.emplace_back(next, next + 1);
        next += 2;
    }
    for (int i = 0; i < l; ++i)
        e.emplace_back(0, next++);
    return graph(n, std::move(e));
}

graph graph::spider(const std::vector<int>& leg_lengths) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : leg_lengths) {
        if (len < 1)
            throw std::invalid_argument("spider leg length must be positive");
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return graph(next, std::move(e));
}

namespace {

bool parse_int(const std::string& token, int& out) {
    if (token.empty())
        return false;
    size_t pos = 0;
    try {
        long v = std::stol(token, &pos);
        if (pos != token.size() || v < 0 || v > 1'000'000'000)
            return false;
        out = static_cast<int>(v);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace

graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int> labels;
    int declared_n = -1;
    int max_index = -1;
    int line_no = 0;
    std::string line;

    auto resolve = [&](const std::string& token, int line_no) {
        if (auto it = labels.find(token); it != labels.end())
            return it->second;
        int v;
        if (!parse_int(token, v))
            throw parse_error(line_no, "expected a vertex index, got '" + token + "'");
        return v;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first))
            continue; // blank line
        if (first[0] == '#') {
            std::string word, name;
            int index;
            std::istringstream rest(line.substr(line.find('#') + 1));
            if (rest >> word && word == "label") {
                std::string idx_token;
                if (!(rest >> name >> idx_token) || !parse_int(idx_token, index))
                    throw parse_error(line_no, "malformed label mapping, expected '# label <name> <index>'");
                labels[name] = index;
                max_index = std::max(max_index, index);
            }
            continue;
        }
        if (first == "n") {
            std::string count_token;
            if (!(ss >> count_token) || !parse_int(count_token, declared_n))
                throw parse_error(line_no, "malformed header, expected 'n <count>'");
            std::string extra;
            if (ss >> extra)
                throw parse_error(line_no, "trailing tokens after vertex count");
            continue;
        }
        std::string second;
        if (!(ss >> second))
            throw parse_error(line_no, "edge line needs two endpoints");
        std::string extra;
        if (ss >> extra)
            throw parse_error(line_no, "trailing tokens after edge");
        int u = resolve(first, line_no);
        int v = resolve(second, line_no);
        if (u == v)
            throw parse_error(line_no, "self loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }

    int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n)
        throw parse_error(line_no, "vertex index " + std::to_string(max_index) +
                                       " exceeds declared count " + std::to_string(n));
    try {
        return graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(line_no, e.what());
    }
}

graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

std::string format_edge_list(const graph& g) {
    std::ostringstream out;
    out << "n " << g.num_vertices() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

bool try_bipartition(const graph& g, bipartition& out) {
    int n = g.num_vertices();
    out.color.assign(n, -1);
    out.count[0] = out.count[1] = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (out.color[s] >= 0)
            continue;
        out.color[s] = 0;
        ++out.count[0];
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (out.color[w] < 0) {
                    out.color[w] = 1 - out.color[u];
                    ++out.count[out.color[w]];
                    stack.push_back(w);
                } else if (out.color[w] == out.color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace maxla
