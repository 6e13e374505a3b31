#include "seidel/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace seidel {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw invalid_parameter("graph order must be positive, got " + std::to_string(n_));
    for (auto& [i, j] : edges_) {
        if (i > j) std::swap(i, j);
        if (i == j) throw invalid_parameter("self-loop at vertex " + std::to_string(i));
        if (i < 0 || j >= n_)
            throw invalid_parameter("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range for order " + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw invalid_parameter("duplicate edge (" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + ")");
}

bool Graph::adjacent(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (auto [i, j] : edges_) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

bool Graph::is_connected() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

Graph complete_graph(int n) {
    if (n < 1) throw invalid_parameter("complete_graph: order must be positive");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return {n, std::move(edges)};
}

Graph complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw invalid_parameter("complete_bipartite: both parts must be nonempty");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(r) * s);
    for (int i = 0; i < r; ++i)
        for (int j = r; j < r + s; ++j) edges.emplace_back(i, j);
    return {r + s, std::move(edges)};
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Graph paley_graph(int q) {
    if (!is_prime(q))
        throw unsupported_field("paley_graph: " + std::to_string(q) +
                                " is not prime (prime fields only)");
    if (q % 4 != 1)
        throw invalid_parameter("paley_graph: " + std::to_string(q) +
                                " != 1 (mod 4), adjacency would not be symmetric");
    std::vector<char> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[static_cast<long>(x) * x % q] = 1;
    std::vector<Edge> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (residue[j - i]) edges.emplace_back(i, j);
    return {q, std::move(edges)};
}

Graph figure1_order6() {
    // Labels v1..v6 mapped to 0..5; v6 stays isolated.
    return {6, {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}}};
}

Graph modified_petersen() {
    // Labels v0..v9 as drawn: outer 4-path + spokes + inner matching, plus
    // the two extra chords that break the Petersen symmetry.
    return {10,
            {{1, 2}, {2, 3}, {3, 4}, {0, 4},            // outer
             {7, 9}, {6, 9}, {6, 8}, {5, 8},            // inner
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},    // spokes
             {0, 7}, {1, 5}}};                          // extras
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    return {n, std::move(edges)};
}

Graph seidel_switch(const Graph& g, const VertexSet& x) {
    const int n = g.order();
    std::vector<char> in_x(n, 0);
    for (int v : x) {
        if (v < 0 || v >= n)
            throw index_error("seidel_switch: vertex " + std::to_string(v) +
                              " out of range for order " + std::to_string(n));
        in_x[v] = 1;
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool cross = in_x[i] != in_x[j];
            if (g.adjacent(i, j) != cross) edges.emplace_back(i, j);
        }
    return {n, std::move(edges)};
}

}  // namespace seidel
