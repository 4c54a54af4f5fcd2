#include "cleangraph/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cleangraph {

bool OracleReport::contains(const VertexSet& k) const {
    return std::find(cliques.begin(), cliques.end(), k) != cliques.end();
}

namespace {

void finish_report(OracleReport& report) {
    std::sort(report.cliques.begin(), report.cliques.end(), lex_less);
    int max_size = 0;
    for (const auto& c : report.cliques) max_size = std::max(max_size, c.count());
    report.count_by_size.assign(max_size + 1, 0);
    for (const auto& c : report.cliques) ++report.count_by_size[c.count()];
}

void extend_clique(const Graph& g, VertexSet& clique, const VertexSet& candidates,
                   OracleReport& report) {
    for (int v : candidates) {
        clique.add(v);
        if (is_simplicial_clique(g, clique)) report.cliques.push_back(clique);
        VertexSet next = candidates & g.neighbours(v);
        VertexSet above(next.universe());
        for (int w = next.next(v); w >= 0; w = next.next(w)) above.add(w);
        extend_clique(g, clique, above, report);
        clique.remove(v);
    }
}

}  // namespace

OracleReport enumerate_simplicial_cliques(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw std::invalid_argument("graph too large for exhaustive clique enumeration");
    OracleReport report;
    VertexSet clique(n);
    extend_clique(g, clique, VertexSet::full(n), report);
    finish_report(report);
    return report;
}

OracleReport enumerate_simplicial_cliques_subsets(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw std::invalid_argument("graph too large for exhaustive subset scan");
    OracleReport report;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) s.add(v);
        if (is_simplicial_clique(g, s)) report.cliques.push_back(s);
    }
    finish_report(report);
    return report;
}

TheoremVerdict verify_theorem(const Graph& g, const VerifyOptions& options) {
    if (g.is_null()) throw std::invalid_argument("null graph");
    if (g.vertex_count() > options.oracle_bound)
        throw std::invalid_argument("graph exceeds the oracle bound");

    TheoremVerdict verdict;
    auto obstruction = find_clean_obstruction(g, options.node_budget);
    if (obstruction.truncated())
        throw BudgetExhaustedError("cleanness undecided: search budget exhausted");
    verdict.clean = !obstruction.found.has_value();
    verdict.obstruction = obstruction.found;
    verdict.chordal = chordal_elimination_order(g).chordal();
    verdict.oracle = enumerate_simplicial_cliques(g, options.oracle_bound);
    verdict.algorithm = find_simplicial_clique(g);

    if (!verdict.clean) return verdict;

    if (verdict.oracle.cliques.empty())
        verdict.violations.push_back("clean graph without a simplicial clique");
    if (!verdict.algorithm) {
        verdict.violations.push_back("two-phase search failed on a clean graph");
    } else {
        if (!is_simplicial_clique(g, verdict.algorithm->clique))
            verdict.violations.push_back("two-phase search returned a non-simplicial set");
        if (!verdict.oracle.contains(verdict.algorithm->clique))
            verdict.violations.push_back("two-phase search result missing from the oracle list");
    }
    if (verdict.chordal) {
        bool has_singleton = verdict.oracle.count_by_size.size() > 1 &&
                             verdict.oracle.count_by_size[1] > 0;
        if (!has_singleton)
            verdict.violations.push_back("chordal clean graph without a simplicial vertex");
    }

    HoleEnumOptions hole_opt;
    hole_opt.node_budget = options.node_budget;
    auto holes = collect_holes(g, hole_opt);
    if (holes.status == HoleEnumStatus::BudgetExhausted)
        throw BudgetExhaustedError("hole enumeration exhausted the search budget");
    for (const auto& h : holes.holes) {
        auto edge = check_hole_dome_property(g, h);
        if (!edge) {
            verdict.violations.push_back("hole " + h.describe() +
                                         " has no edge with a simplicial dome");
            continue;
        }
        if (!verdict.oracle.contains(dome(g, edge->first, edge->second).members))
            verdict.violations.push_back("dome of edge on hole " + h.describe() +
                                         " missing from the oracle list");
    }
    return verdict;
}

}  // namespace cleangraph
