#pragma once

#include "cleangraph/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cleangraph {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct SearchStats {
    std::uint64_t nodes = 0;
    bool complete = true;
};

// Outcome of a budgeted search for a witness. A missing witness is only
// conclusive when the search ran to completion.
template <class T>
struct SearchResult {
    std::optional<T> found;
    SearchStats stats;

    bool definitive_none() const { return !found.has_value() && stats.complete; }
    bool truncated() const { return !found.has_value() && !stats.complete; }
};

// Induced cycle of length >= 4, stored in canonical order: the smallest
// vertex first, followed by the smaller of its two cycle neighbours.
struct Hole {
    std::vector<int> vertices;

    int length() const { return int(vertices.size()); }
    VertexSet vertex_set(int universe) const;
    std::string describe() const;  // "0-1-2-3"
};

// Rotates/reflects an arbitrary cyclic order into canonical form. Purely
// combinatorial; does not check holeness.
Hole canonical_hole(std::vector<int> cycle);

bool is_hole(const Graph& g, const Hole& h);

enum class HoleEnumStatus { Complete, BudgetExhausted, CapReached, StoppedBySink };

struct HoleEnumOptions {
    std::optional<int> max_length;
    std::uint64_t node_budget = kDefaultSearchBudget;
    std::optional<std::uint64_t> max_holes;
};

struct HoleEnumOutcome {
    HoleEnumStatus status = HoleEnumStatus::Complete;
    SearchStats stats;
};

// Emits every hole exactly once, in a deterministic DFS order over growing
// induced paths (each hole appears in canonical form). The sink returns
// false to stop early. Nodes are counted per path extension.
HoleEnumOutcome enumerate_holes(const Graph& g, const std::function<bool(const Hole&)>& sink,
                                const HoleEnumOptions& options = {});

struct HoleList {
    std::vector<Hole> holes;
    HoleEnumStatus status = HoleEnumStatus::Complete;
    SearchStats stats;
};
HoleList collect_holes(const Graph& g, const HoleEnumOptions& options = {});

SearchResult<Hole> find_even_hole(const Graph& g, std::uint64_t node_budget = kDefaultSearchBudget);

// Maximum cardinality search plus elimination-order verification. If the
// graph is chordal the order is a perfect elimination ordering (the first
// vertex is simplicial); otherwise a hole certifies non-chordality.
struct EliminationResult {
    std::optional<std::vector<int>> order;
    std::optional<Hole> hole;
    bool chordal() const { return order.has_value(); }
};
EliminationResult chordal_elimination_order(const Graph& g);

// Least vertex whose neighbourhood is a clique.
std::optional<int> find_simplicial_vertex(const Graph& g);

enum class ObstructionKind { Claw, Jewel, LineWheel, ShortPrism, SevenAntihole };

std::string obstruction_kind_name(ObstructionKind kind);

// Witness with role annotations. Meaning per kind:
//   Claw          apex = centre, path = the three leaves
//   Jewel         hole (rotated so the apex neighbours come first), apex
//   LineWheel     hole, apex, attach = a with apex neighbours {h0,h1,ha,ha+1}
//   ShortPrism    hole (4 vertices), path = p1..pt
//   SevenAntihole hole = the 7 vertices ordered as the complement cycle
struct Obstruction {
    ObstructionKind kind;
    std::vector<int> hole;
    std::vector<int> path;
    int apex = -1;
    int attach = -1;

    std::vector<int> all_vertices() const;
    std::string describe() const;
};

// Lexicographically first claw: least centre, then least leaf triple.
std::optional<Obstruction> find_claw(const Graph& g);

// Searches in order: claw, seven-antihole, jewel, line wheel, short prism.
// "none" is only conclusive when the search completed within budget.
SearchResult<Obstruction> find_clean_obstruction(const Graph& g,
                                                 std::uint64_t node_budget = kDefaultSearchBudget);

bool verify_obstruction(const Graph& g, const Obstruction& o);

enum class HoleNeighbourTag {
    Anticomplete,
    CompleteToC5,
    TwoConsecutive,
    ThreeConsecutive,
    Violation,
};

std::string hole_neighbour_tag_name(HoleNeighbourTag tag);

struct HoleNeighbourOutcome {
    HoleNeighbourTag tag;
    VertexSet on_hole;  // N(v) restricted to the hole
};

// Classifies how v attaches to the hole. Throws if v lies on h or h is not
// a hole of g. In a clean graph Violation never occurs.
HoleNeighbourOutcome classify_hole_neighbours(const Graph& g, const Hole& h, int v);

}  // namespace cleangraph
