#include "cleangraph/graph.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

namespace cleangraph {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with n = " + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!g.adj_[u].contains(v)) {
            g.adj_[u].add(v);
            g.adj_[v].add(u);
            ++g.m_;
        }
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        g.adj_[u] = VertexSet::full(n_) - adj_[u];
        g.adj_[u].remove(u);
    }
    g.m_ = n_ * (n_ - 1) / 2 - m_;
    return g;
}

Graph Graph::induced(const VertexSet& s, std::vector<int>* old_labels) const {
    std::vector<int> label = s.elements();
    std::vector<int> to_new(n_, -1);
    for (std::size_t i = 0; i < label.size(); ++i) to_new[label[i]] = int(i);
    Graph g(int(label.size()));
    for (std::size_t i = 0; i < label.size(); ++i)
        for (int v : adj_[label[i]] & s)
            if (to_new[v] > int(i)) {
                g.adj_[i].add(to_new[v]);
                g.adj_[to_new[v]].add(int(i));
                ++g.m_;
            }
    if (old_labels) *old_labels = std::move(label);
    return g;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s) {
        VertexSet rest = s - g.neighbours(v);
        rest.remove(v);
        if (!rest.empty()) return false;
    }
    return true;
}

bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("sets must be disjoint");
    for (int v : a)
        if (!b.is_subset_of(g.neighbours(v))) return false;
    return true;
}

bool is_anticomplete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("sets must be disjoint");
    for (int v : a)
        if (b.intersects(g.neighbours(v))) return false;
    return true;
}

bool is_induced_path(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) return false;
    const int n = g.vertex_count();
    VertexSet seen(n);
    for (int v : vertices) {
        if (v < 0 || v >= n || seen.contains(v)) return false;
        seen.add(v);
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            bool adj = g.adjacent(vertices[i], vertices[j]);
            if (adj != (j == i + 1)) return false;
        }
    return true;
}

namespace {

// BFS distances from the source set. Expansion is restricted to `through`;
// members of `absorb` get a distance when reached but are not expanded.
std::vector<int> bfs_layers(const Graph& g, const VertexSet& sources,
                            const VertexSet& through, const VertexSet& absorb) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    for (int v : sources) {
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] > 0 && absorb.contains(u)) continue;
        for (int w : g.neighbours(u)) {
            if (dist[w] >= 0) continue;
            if (!through.contains(w) && !absorb.contains(w)) continue;
            dist[w] = dist[u] + 1;
            q.push(w);
        }
    }
    return dist;
}

}  // namespace

std::optional<InducedPath> find_induced_path(const Graph& g, const VertexSet& from,
                                             const VertexSet& to, const VertexSet& allowed) {
    if (from.empty() || to.empty()) throw std::invalid_argument("endpoint sets must be non-empty");

    VertexSet both = from & to;
    if (!both.empty()) return InducedPath{{both.first()}};

    // Forward distances from `from` through `allowed`, with `to` absorbing;
    // backward distances from `to` through `allowed`. A vertex lies on some
    // shortest valid path iff the two distances sum to the path length, which
    // lets the reconstruction pick the least vertex at every step.
    std::vector<int> df = bfs_layers(g, from, allowed, to);
    std::vector<int> db = bfs_layers(g, to, allowed, from);

    int best = -1;
    for (int v : to)
        if (df[v] >= 0 && (best < 0 || df[v] < best)) best = df[v];
    if (best < 0) return std::nullopt;

    int start = -1;
    for (int v : from)
        if (df[v] == 0 && db[v] == best && (start < 0 || v < start)) start = v;

    std::vector<int> path{start};
    for (int step = 1; step <= best; ++step) {
        int cur = path.back(), pick = -1;
        for (int w : g.neighbours(cur)) {
            if (df[w] != step || db[w] != best - step) continue;
            if (step < best && !allowed.contains(w)) continue;
            if (step == best && !to.contains(w)) continue;
            if (pick < 0 || w < pick) pick = w;
        }
        path.push_back(pick);
    }
    return InducedPath{std::move(path)};
}

std::string format_vertex_set(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    bool sep = false;
    for (int v : s) {
        if (sep) out << ',';
        out << v;
        sep = true;
    }
    out << '}';
    return out.str();
}

std::string format_vertex_list(const std::vector<int>& vs, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << sep;
        out << vs[i];
    }
    return out.str();
}

}  // namespace cleangraph
