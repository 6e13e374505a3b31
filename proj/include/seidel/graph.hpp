#pragma once

#include <utility>
#include <vector>

#include "seidel/errors.hpp"

namespace seidel {

using Edge = std::pair<int, int>;  // stored with first < second
using VertexSet = std::vector<int>;

// Simple undirected graph: order plus a sorted edge set. Immutable after
// construction, so values can be shared freely across threads.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool adjacent(int i, int j) const;
    std::vector<int> degrees() const;
    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 1;
    std::vector<Edge> edges_;
};

Graph complete_graph(int n);
Graph complete_bipartite(int r, int s);

// Paley graph on F_q for prime q = 1 mod 4: x ~ y iff x - y is a nonzero
// quadratic residue. (q-1)/2-regular.
Graph paley_graph(int q);

// Named fixtures. figure1_order6 is the 6-vertex conference-type graph whose
// Seidel matrix squares to 5I (one isolated vertex, five of degree two);
// modified_petersen is a connected 3-regular 10-vertex graph whose vertex
// energies are not all equal.
Graph figure1_order6();
Graph modified_petersen();

Graph complement(const Graph& g);

// Toggle every edge between x and its complement; edges inside either side
// are untouched. Involution for fixed x.
Graph seidel_switch(const Graph& g, const VertexSet& x);

}  // namespace seidel
