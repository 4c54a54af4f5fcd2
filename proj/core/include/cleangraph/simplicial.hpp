#pragma once

#include "cleangraph/recognizers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cleangraph {

// {a, b} plus the common neighbours of a and b. Throws if ab is not an edge.
VertexSet x_set(const Graph& g, int a, int b);

// members = the y in x_set whose neighbours outside x_set form a clique.
struct Dome {
    int a = -1, b = -1;
    VertexSet x;
    VertexSet members;
};
Dome dome(const Graph& g, int a, int b);

// Non-empty clique K such that N(v) \ K is a clique for every v in K.
bool is_simplicial_clique(const Graph& g, const VertexSet& k);

// Candidate locations for a simplicial clique: one per vertex ({v}) and one
// per edge (the dome of ab). At most n + m <= n^2 descriptors.
struct CandidateDescriptor {
    enum class Kind { Vertex, Edge };
    Kind kind;
    int a = -1;
    int b = -1;

    std::string describe() const;
};
std::vector<CandidateDescriptor> candidate_descriptors(const Graph& g);
VertexSet materialize_candidate(const Graph& g, const CandidateDescriptor& c);

struct SimplicialCliqueResult {
    enum class Provenance { SimplicialVertex, EdgeDome };
    VertexSet clique;
    Provenance provenance;
    int vertex = -1;          // Provenance::SimplicialVertex
    int edge_a = -1, edge_b = -1;  // Provenance::EdgeDome

    std::string describe() const;
};

struct FindOptions {
    int threads = 1;
};

// Phase 1 scans vertices in increasing order for a simplicial vertex; phase 2
// scans edges lexicographically for one whose dome is a simplicial clique.
// Deterministic for any thread count: the first qualifying edge wins.
// Returns nothing when the graph has no simplicial clique at these candidate
// locations (which, for clean graphs, means never). Throws on the null graph.
std::optional<SimplicialCliqueResult> find_simplicial_clique(const Graph& g,
                                                             const FindOptions& options = {});

// First edge of h, in hole order, whose dome is a simplicial clique of g.
// nullopt means no edge of the hole qualifies; clean graphs always yield one.
std::optional<Edge> check_hole_dome_property(const Graph& g, const Hole& h);

}  // namespace cleangraph
