#pragma once

#include "cleangraph/recognizers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cleangraph {

// Partition of a vertex subset W into k >= 4 cyclically ordered non-empty
// cliques K_0..K_{k-1} where every member has a neighbour in both
// neighbouring classes and non-neighbouring classes are anticomplete.
struct KStructure {
    std::vector<VertexSet> classes;

    int k() const { return int(classes.size()); }
    VertexSet union_set() const;
};

struct KStructureViolation {
    enum class Rule { ClassEmptyOrNotClique, MissingNeighbour, NotAnticomplete };
    Rule rule;
    int class_a = -1, class_b = -1;
    int u = -1, v = -1;

    std::string describe() const;
};

// nullopt when the classes form a k-structure; otherwise the first failure
// in rule order. Throws on k < 4 or overlapping classes.
std::optional<KStructureViolation> verify_k_structure(const Graph& g, const KStructure& ks);

// Whether vertex v (outside the structure) can join class i keeping the
// structure valid: complete to K_i, a neighbour in both cyclic neighbour
// classes, anticomplete to all other classes.
bool can_insert(const Graph& g, const KStructure& ks, int v, int class_index);

// Starts from the hole's singleton classes and repeatedly scans vertices
// outside W in increasing order (classes in increasing order) for admissible
// insertions, until a fixpoint. The result is maximal under single-vertex
// insertion. Throws if h is not a hole of g.
KStructure grow_k_structure(const Graph& g, const Hole& h);

// Split of each class by adjacency to a probe vertex v outside W.
struct ProbeTrace {
    int probe = -1;
    std::vector<VertexSet> hit;     // N(v) ∩ K_i
    std::vector<VertexSet> missed;  // K_i \ N(v)
};
ProbeTrace probe_trace(const Graph& g, const KStructure& ks, int v);

// fringe[i] = vertices outside W with a neighbour in K_i, a neighbour in
// K_{i+1}, and none elsewhere in W.
std::vector<VertexSet> fringe_classes(const Graph& g, const KStructure& ks);

enum class StructureClaim {
    ContainmentFlip,           // incomparability towards K_{i+1} forces containment towards K_{i-1}
    NextClassComparable,       // neighbourhoods within K_{i+1} are nested
    CompleteToNeighbourClass,  // every class is complete to a cyclic neighbour
    OnePerClassPaths,          // one-vertex-per-class paths across class intervals
    ProbeSplit,                // hit parts avoid a missed neighbour part, and dually
    ProbeWindow,               // probe support spans <= 2 consecutive classes, or the k=5 exception
    FringeCliques,             // fringe classes extend cliques, avoid W-complete probes and each other
};

std::string structure_claim_name(StructureClaim claim);

struct ClaimResult {
    StructureClaim claim;
    bool pass = true;
    std::string witness;  // failure detail, empty when passing
};

struct StructureClaimReport {
    std::vector<ClaimResult> results;

    bool all_pass() const;
    const ClaimResult& result(StructureClaim claim) const;
};

// Evaluates the seven structural claims that hold in clean graphs. Throws if
// ks is not a valid k-structure. The probe and fringe claims are proved only
// for maximal structures (as produced by grow_k_structure); elsewhere a
// failure is informational.
StructureClaimReport check_structure_claims(const Graph& g, const KStructure& ks);

}  // namespace cleangraph
