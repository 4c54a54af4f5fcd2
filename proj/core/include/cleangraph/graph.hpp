#pragma once

#include "cleangraph/vertex_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cleangraph {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Immutable after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    // Duplicate edges are merged.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool is_null() const { return n_ == 0; }

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // Edges (a, b) with a < b in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;

    // Subgraph induced on s, relabelled to 0..|s|-1 in increasing vertex
    // order. If old_labels is non-null it receives the original vertex of
    // each new label.
    Graph induced(const VertexSet& s, std::vector<int>* old_labels = nullptr) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

bool is_clique(const Graph& g, const VertexSet& s);

// Both throw std::invalid_argument if a and b intersect.
bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_anticomplete_between(const Graph& g, const VertexSet& a, const VertexSet& b);

struct InducedPath {
    std::vector<int> vertices;
    int length() const { return int(vertices.size()); }
};

// Consecutive vertices adjacent, non-consecutive ones not, all distinct.
bool is_induced_path(const Graph& g, const std::vector<int>& vertices);

// Shortest induced path from a vertex of `from` to a vertex of `to` whose
// interior vertices lie in `allowed`; lexicographically least among the
// shortest ones. Throws if `from` or `to` is empty.
std::optional<InducedPath> find_induced_path(const Graph& g, const VertexSet& from,
                                             const VertexSet& to, const VertexSet& allowed);

// "{0,1,2}" style rendering used by reports.
std::string format_vertex_set(const VertexSet& s);
std::string format_vertex_list(const std::vector<int>& vs, char sep);

}  // namespace cleangraph
