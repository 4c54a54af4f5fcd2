#include "cleangraph/simplicial.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cleangraph {

VertexSet x_set(const Graph& g, int a, int b) {
    const int n = g.vertex_count();
    if (a < 0 || a >= n || b < 0 || b >= n || !g.adjacent(a, b))
        throw std::invalid_argument("x_set requires an edge");
    VertexSet x = g.neighbours(a) & g.neighbours(b);
    x.add(a);
    x.add(b);
    return x;
}

Dome dome(const Graph& g, int a, int b) {
    Dome d;
    d.a = a;
    d.b = b;
    d.x = x_set(g, a, b);
    d.members = VertexSet(g.vertex_count());
    for (int y : d.x)
        if (is_clique(g, g.neighbours(y) - d.x)) d.members.add(y);
    return d;
}

bool is_simplicial_clique(const Graph& g, const VertexSet& k) {
    if (k.empty() || !is_clique(g, k)) return false;
    for (int v : k)
        if (!is_clique(g, g.neighbours(v) - k)) return false;
    return true;
}

std::string CandidateDescriptor::describe() const {
    std::ostringstream out;
    if (kind == Kind::Vertex)
        out << "vertex " << a;
    else
        out << "edge (" << a << "," << b << ")";
    return out.str();
}

std::vector<CandidateDescriptor> candidate_descriptors(const Graph& g) {
    if (g.is_null()) throw std::invalid_argument("null graph has no candidates");
    std::vector<CandidateDescriptor> out;
    out.reserve(std::size_t(g.vertex_count()) + std::size_t(g.edge_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        out.push_back({CandidateDescriptor::Kind::Vertex, v, -1});
    for (const auto& [a, b] : g.edges())
        out.push_back({CandidateDescriptor::Kind::Edge, a, b});
    return out;
}

VertexSet materialize_candidate(const Graph& g, const CandidateDescriptor& c) {
    if (c.kind == CandidateDescriptor::Kind::Vertex)
        return VertexSet::of(g.vertex_count(), {c.a});
    return dome(g, c.a, c.b).members;
}

std::string SimplicialCliqueResult::describe() const {
    std::ostringstream out;
    out << "clique " << format_vertex_set(clique);
    if (provenance == Provenance::SimplicialVertex)
        out << " via simplicial vertex " << vertex;
    else
        out << " via dome of edge (" << edge_a << "," << edge_b << ")";
    return out.str();
}

namespace {

std::optional<SimplicialCliqueResult> edge_dome_result(const Graph& g, const Edge& e) {
    Dome d = dome(g, e.first, e.second);
    if (!is_simplicial_clique(g, d.members)) return std::nullopt;
    SimplicialCliqueResult r;
    r.clique = d.members;
    r.provenance = SimplicialCliqueResult::Provenance::EdgeDome;
    r.edge_a = e.first;
    r.edge_b = e.second;
    return r;
}

// Threads claim edge indices in order and record the smallest qualifying
// one, so the answer matches the sequential scan.
std::optional<SimplicialCliqueResult> parallel_edge_scan(const Graph& g,
                                                         const std::vector<Edge>& edges,
                                                         int threads) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{edges.size()};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= edges.size() || i >= best.load()) break;
                Dome d = dome(g, edges[i].first, edges[i].second);
                if (!is_simplicial_clique(g, d.members)) continue;
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        });
    for (auto& th : pool) th.join();
    std::size_t i = best.load();
    if (i >= edges.size()) return std::nullopt;
    return edge_dome_result(g, edges[i]);
}

}  // namespace

std::optional<SimplicialCliqueResult> find_simplicial_clique(const Graph& g,
                                                             const FindOptions& options) {
    if (g.is_null()) throw std::invalid_argument("null graph");

    if (auto v = find_simplicial_vertex(g)) {
        SimplicialCliqueResult r;
        r.clique = VertexSet::of(g.vertex_count(), {*v});
        r.provenance = SimplicialCliqueResult::Provenance::SimplicialVertex;
        r.vertex = *v;
        return r;
    }

    auto edges = g.edges();
    if (options.threads > 1 && edges.size() > 64)
        return parallel_edge_scan(g, edges, options.threads);
    for (const auto& e : edges)
        if (auto r = edge_dome_result(g, e)) return r;
    return std::nullopt;
}

std::optional<Edge> check_hole_dome_property(const Graph& g, const Hole& h) {
    if (!is_hole(g, h)) throw std::invalid_argument("not a hole of the graph");
    const int k = h.length();
    for (int i = 0; i < k; ++i) {
        int a = h.vertices[i], b = h.vertices[(i + 1) % k];
        if (is_simplicial_clique(g, dome(g, a, b).members)) return Edge{a, b};
    }
    return std::nullopt;
}

}  // namespace cleangraph
