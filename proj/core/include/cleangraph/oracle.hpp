#pragma once

#include "cleangraph/simplicial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cleangraph {

// Thrown when a budgeted search ran out before the answer was decided.
class BudgetExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleReport {
    std::vector<VertexSet> cliques;  // ordered by element sequence
    std::vector<int> count_by_size;  // count_by_size[s] = number of size-s entries

    bool contains(const VertexSet& k) const;
};

// Every simplicial clique, found by walking the clique tree (each clique is
// extended with vertices above its maximum). Throws when the graph exceeds
// max_vertices.
OracleReport enumerate_simplicial_cliques(const Graph& g, int max_vertices = 20);

// Independent second path over all 2^n vertex subsets, for cross-validation.
OracleReport enumerate_simplicial_cliques_subsets(const Graph& g, int max_vertices = 12);

struct TheoremVerdict {
    bool clean = false;
    bool chordal = false;
    std::optional<Obstruction> obstruction;
    OracleReport oracle;
    std::optional<SimplicialCliqueResult> algorithm;
    std::vector<std::string> violations;

    bool consistent() const { return violations.empty(); }
};

struct VerifyOptions {
    std::uint64_t node_budget = kDefaultSearchBudget;
    int oracle_bound = 20;
};

// Cross-checks the guarantees on one graph: a non-null clean graph has a
// simplicial clique and the two-phase search returns one of them; a chordal
// clean graph has a simplicial vertex (a singleton in the oracle list); and
// every hole of a clean graph has an edge whose dome is a simplicial clique.
// Throws on the null graph, above the oracle bound, or when the search
// budget is exhausted before cleanness is decided.
TheoremVerdict verify_theorem(const Graph& g, const VerifyOptions& options = {});

}  // namespace cleangraph
