#include "cleangraph/recognizers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cleangraph {

VertexSet Hole::vertex_set(int universe) const {
    VertexSet s(universe);
    for (int v : vertices) s.add(v);
    return s;
}

std::string Hole::describe() const { return format_vertex_list(vertices, '-'); }

Hole canonical_hole(std::vector<int> cycle) {
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    if (cycle.size() >= 3 && cycle[1] > cycle.back())
        std::reverse(cycle.begin() + 1, cycle.end());
    return Hole{std::move(cycle)};
}

bool is_hole(const Graph& g, const Hole& h) {
    const auto& vs = h.vertices;
    const int k = h.length();
    if (k < 4) return false;
    const int n = g.vertex_count();
    VertexSet seen(n);
    for (int v : vs) {
        if (v < 0 || v >= n || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
        }
    return true;
}

namespace {

// DFS over growing induced paths. The start vertex is the smallest on the
// eventual hole and the cycle closes only into a vertex larger than the
// second one, so each hole is emitted exactly once, in canonical form.
struct HoleDfs {
    const Graph& g;
    const std::function<bool(const Hole&)>& sink;
    const HoleEnumOptions& opt;

    SearchStats stats;
    HoleEnumStatus status = HoleEnumStatus::Complete;
    std::uint64_t emitted = 0;
    std::vector<int> path;
    VertexSet on_path;

    HoleDfs(const Graph& g_, const std::function<bool(const Hole&)>& sink_,
            const HoleEnumOptions& opt_)
        : g(g_), sink(sink_), opt(opt_), on_path(g_.vertex_count()) {}

    bool spend_node() {
        if (++stats.nodes > opt.node_budget) {
            status = HoleEnumStatus::BudgetExhausted;
            return false;
        }
        return true;
    }

    bool emit(int closer) {
        path.push_back(closer);
        Hole h{path};
        path.pop_back();
        if (!sink(h)) {
            status = HoleEnumStatus::StoppedBySink;
            return false;
        }
        if (opt.max_holes && ++emitted >= *opt.max_holes) {
            status = HoleEnumStatus::CapReached;
            return false;
        }
        return true;
    }

    // blocked holds the neighbourhoods of interior path vertices (all but
    // the first and the current last); extending into them would break
    // inducedness.
    bool extend(const VertexSet& blocked) {
        const int v0 = path[0];
        const int tip = path.back();
        const bool may_close = int(path.size()) + 1 >= 4 &&
                               (!opt.max_length || int(path.size()) + 1 <= *opt.max_length);
        const bool may_recurse = !opt.max_length || int(path.size()) + 2 <= *opt.max_length;

        VertexSet cand = g.neighbours(tip) - blocked - on_path;
        for (int w = cand.next(v0); w >= 0; w = cand.next(w)) {
            if (!spend_node()) return false;
            if (g.adjacent(w, v0)) {
                if (may_close && w > path[1] && !emit(w)) return false;
            } else if (may_recurse) {
                path.push_back(w);
                on_path.add(w);
                VertexSet blocked2 = blocked | g.neighbours(tip);
                bool keep_going = extend(blocked2);
                on_path.remove(w);
                path.pop_back();
                if (!keep_going) return false;
            }
        }
        return true;
    }

    void run() {
        const int n = g.vertex_count();
        if (opt.max_length && *opt.max_length < 4) return;
        for (int v0 = 0; v0 < n; ++v0) {
            const VertexSet& nb = g.neighbours(v0);
            for (int v1 = nb.next(v0); v1 >= 0; v1 = nb.next(v1)) {
                if (!spend_node()) return;
                path = {v0, v1};
                on_path = VertexSet(n);
                on_path.add(v0);
                on_path.add(v1);
                if (!extend(VertexSet(n))) return;
            }
        }
    }
};

}  // namespace

HoleEnumOutcome enumerate_holes(const Graph& g, const std::function<bool(const Hole&)>& sink,
                                const HoleEnumOptions& options) {
    HoleDfs dfs(g, sink, options);
    dfs.run();
    dfs.stats.complete = dfs.status == HoleEnumStatus::Complete;
    return HoleEnumOutcome{dfs.status, dfs.stats};
}

HoleList collect_holes(const Graph& g, const HoleEnumOptions& options) {
    HoleList out;
    auto outcome = enumerate_holes(
        g,
        [&](const Hole& h) {
            out.holes.push_back(h);
            return true;
        },
        options);
    out.status = outcome.status;
    out.stats = outcome.stats;
    return out;
}

SearchResult<Hole> find_even_hole(const Graph& g, std::uint64_t node_budget) {
    SearchResult<Hole> result;
    HoleEnumOptions opt;
    opt.node_budget = node_budget;
    auto outcome = enumerate_holes(
        g,
        [&](const Hole& h) {
            if (h.length() % 2 == 0) {
                result.found = h;
                return false;
            }
            return true;
        },
        opt);
    result.stats = outcome.stats;
    result.stats.complete = outcome.status != HoleEnumStatus::BudgetExhausted;
    return result;
}

namespace {

// Deterministic hole extraction for non-chordal graphs: scan triples
// (v, x, y) with x, y a non-adjacent pair in N(v) and look for an induced
// x-y path avoiding N[v]. Any hole h1-h2-h3-... certifies the triple
// (h2, h1, h3), so the scan succeeds on every non-chordal graph.
std::optional<Hole> find_hole_via_triples(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        VertexSet outside = VertexSet::full(n) - g.neighbours(v);
        outside.remove(v);
        auto nb = g.neighbours(v).elements();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.adjacent(x, y)) continue;
                auto path = find_induced_path(g, VertexSet::of(n, {x}), VertexSet::of(n, {y}),
                                              outside);
                if (!path) continue;
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path->vertices.begin(), path->vertices.end());
                return canonical_hole(std::move(cycle));
            }
    }
    return std::nullopt;
}

}  // namespace

EliminationResult chordal_elimination_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0), visit;
    std::vector<char> visited(n, false);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        visit.push_back(best);
        for (int w : g.neighbours(best))
            if (!visited[w]) ++weight[w];
    }

    std::vector<int> order(visit.rbegin(), visit.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    VertexSet later(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        later = VertexSet(n);
        for (int w : g.neighbours(order[i]))
            if (pos[w] > i) later.add(w);
        ok = is_clique(g, later);
    }
    if (ok) return EliminationResult{std::move(order), std::nullopt};

    auto hole = find_hole_via_triples(g);
    return EliminationResult{std::nullopt, std::move(hole)};
}

std::optional<int> find_simplicial_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_clique(g, g.neighbours(v))) return v;
    return std::nullopt;
}

std::string obstruction_kind_name(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::Claw: return "claw";
        case ObstructionKind::Jewel: return "jewel";
        case ObstructionKind::LineWheel: return "line wheel";
        case ObstructionKind::ShortPrism: return "short prism";
        case ObstructionKind::SevenAntihole: return "seven-antihole";
    }
    return "?";
}

std::vector<int> Obstruction::all_vertices() const {
    std::vector<int> out = hole;
    out.insert(out.end(), path.begin(), path.end());
    if (apex >= 0) out.push_back(apex);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Obstruction::describe() const {
    std::ostringstream out;
    switch (kind) {
        case ObstructionKind::Claw:
            out << "claw {" << apex << ";" << format_vertex_list(path, ',') << "}";
            break;
        case ObstructionKind::Jewel:
            out << "jewel (hole " << format_vertex_list(hole, '-') << ", apex " << apex << ")";
            break;
        case ObstructionKind::LineWheel:
            out << "line wheel (hole " << format_vertex_list(hole, '-') << ", apex " << apex
                << ")";
            break;
        case ObstructionKind::ShortPrism:
            out << "short prism (hole " << format_vertex_list(hole, '-') << ", path "
                << format_vertex_list(path, '-') << ")";
            break;
        case ObstructionKind::SevenAntihole: {
            std::vector<int> sorted = hole;
            std::sort(sorted.begin(), sorted.end());
            out << "seven-antihole on {" << format_vertex_list(sorted, ',') << "}";
            break;
        }
    }
    return out.str();
}

std::optional<Obstruction> find_claw(const Graph& g) {
    const int n = g.vertex_count();
    for (int c = 0; c < n; ++c) {
        auto nb = g.neighbours(c).elements();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.adjacent(x, y)) continue;
                VertexSet third = g.neighbours(c) - g.neighbours(x) - g.neighbours(y);
                third.remove(x);
                third.remove(y);
                int z = third.next(y);
                if (z >= 0)
                    return Obstruction{ObstructionKind::Claw, {}, {x, y, z}, c, -1};
            }
    }
    return std::nullopt;
}

namespace {

// Maximal cyclic runs of marked positions, as (start, length) pairs in
// ascending start order. A fully marked circle is one run of length k.
std::vector<std::pair<int, int>> cyclic_runs(const std::vector<char>& marked) {
    const int k = int(marked.size());
    std::vector<std::pair<int, int>> runs;
    int total = 0;
    for (char m : marked) total += m;
    if (total == 0) return runs;
    if (total == k) {
        runs.emplace_back(0, k);
        return runs;
    }
    for (int s = 0; s < k; ++s) {
        if (!marked[s] || marked[(s + k - 1) % k]) continue;
        int len = 0;
        while (marked[(s + len) % k]) ++len;
        runs.emplace_back(s, len);
    }
    return runs;
}

std::vector<char> hole_marks(const Hole& h, const VertexSet& on_hole) {
    std::vector<char> marked(h.vertices.size(), 0);
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
        marked[i] = on_hole.contains(h.vertices[i]);
    return marked;
}

std::vector<int> rotate_hole(const std::vector<int>& vs, int start) {
    std::vector<int> out;
    out.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) out.push_back(vs[(start + i) % vs.size()]);
    return out;
}

// Apex test shared by the jewel and line wheel passes.
std::optional<Obstruction> apex_on_hole(const Graph& g, const Hole& h, ObstructionKind want) {
    const int n = g.vertex_count();
    const int k = h.length();
    VertexSet hs = h.vertex_set(n);
    for (int v = 0; v < n; ++v) {
        if (hs.contains(v)) continue;
        VertexSet on_hole = g.neighbours(v) & hs;
        if (on_hole.count() != 4) continue;
        auto runs = cyclic_runs(hole_marks(h, on_hole));
        if (want == ObstructionKind::Jewel) {
            if (k == 4)
                return Obstruction{ObstructionKind::Jewel, h.vertices, {}, v, -1};
            if (runs.size() == 1 && runs[0].second == 4)
                return Obstruction{ObstructionKind::Jewel, rotate_hole(h.vertices, runs[0].first),
                                   {}, v, -1};
        } else {
            if (k < 6 || runs.size() != 2 || runs[0].second != 2 || runs[1].second != 2) continue;
            int attach = (runs[1].first - runs[0].first + k) % k;
            return Obstruction{ObstructionKind::LineWheel, rotate_hole(h.vertices, runs[0].first),
                               {}, v, attach};
        }
    }
    return std::nullopt;
}

std::optional<Obstruction> seven_antihole_from(const Graph& g, std::uint64_t budget,
                                               SearchStats& stats, bool& truncated) {
    if (g.vertex_count() < 7) return std::nullopt;
    Graph comp = g.complement();
    std::optional<Obstruction> found;
    HoleEnumOptions opt;
    opt.max_length = 7;
    opt.node_budget = budget;
    auto outcome = enumerate_holes(
        comp,
        [&](const Hole& h) {
            if (h.length() != 7) return true;
            found = Obstruction{ObstructionKind::SevenAntihole, h.vertices, {}, -1, -1};
            return false;
        },
        opt);
    stats.nodes += outcome.stats.nodes;
    truncated = truncated || outcome.status == HoleEnumStatus::BudgetExhausted;
    return found;
}

std::optional<Obstruction> hole_apex_pass(const Graph& g, ObstructionKind want,
                                          std::uint64_t budget, SearchStats& stats,
                                          bool& truncated) {
    std::optional<Obstruction> found;
    HoleEnumOptions opt;
    opt.node_budget = budget;
    auto outcome = enumerate_holes(
        g,
        [&](const Hole& h) {
            found = apex_on_hole(g, h, want);
            return !found.has_value();
        },
        opt);
    stats.nodes += outcome.stats.nodes;
    truncated = truncated || outcome.status == HoleEnumStatus::BudgetExhausted;
    return found;
}

std::optional<Obstruction> short_prism_from(const Graph& g, std::uint64_t budget,
                                            SearchStats& stats, bool& truncated) {
    const int n = g.vertex_count();
    std::optional<Obstruction> found;
    HoleEnumOptions opt;
    opt.max_length = 4;
    opt.node_budget = budget;
    auto outcome = enumerate_holes(
        g,
        [&](const Hole& h) {
            VertexSet hs = h.vertex_set(n);
            // Two ways to pair opposite edges of the 4-hole; for each, look
            // for an attachment path whose interior avoids the hole's
            // neighbourhood entirely.
            for (int rot = 0; rot < 2 && !found; ++rot) {
                std::vector<int> hv = rotate_hole(h.vertices, rot);
                VertexSet front(n), back(n), all_four(n), free(n);
                VertexSet want_front = VertexSet::of(n, {hv[0], hv[1]});
                VertexSet want_back = VertexSet::of(n, {hv[2], hv[3]});
                for (int v = 0; v < n; ++v) {
                    if (hs.contains(v)) continue;
                    VertexSet prof = g.neighbours(v) & hs;
                    if (prof == want_front) front.add(v);
                    else if (prof == want_back) back.add(v);
                    else if (prof == hs) all_four.add(v);
                    else if (prof.empty()) free.add(v);
                }
                if (rot == 0 && !all_four.empty())
                    found = Obstruction{ObstructionKind::ShortPrism, h.vertices,
                                        {all_four.first()}, -1, -1};
                if (!found && !front.empty() && !back.empty()) {
                    auto p = find_induced_path(g, front, back, free);
                    if (p)
                        found = Obstruction{ObstructionKind::ShortPrism, hv, p->vertices, -1, -1};
                }
            }
            return !found.has_value();
        },
        opt);
    stats.nodes += outcome.stats.nodes;
    truncated = truncated || outcome.status == HoleEnumStatus::BudgetExhausted;
    return found;
}

}  // namespace

SearchResult<Obstruction> find_clean_obstruction(const Graph& g, std::uint64_t node_budget) {
    SearchResult<Obstruction> result;
    result.found = find_claw(g);
    if (result.found) return result;

    bool truncated = false;
    auto remaining = [&] {
        return node_budget > result.stats.nodes ? node_budget - result.stats.nodes : 0;
    };

    result.found = seven_antihole_from(g, remaining(), result.stats, truncated);
    if (!result.found)
        result.found = hole_apex_pass(g, ObstructionKind::Jewel, remaining(), result.stats,
                                      truncated);
    if (!result.found)
        result.found = hole_apex_pass(g, ObstructionKind::LineWheel, remaining(), result.stats,
                                      truncated);
    if (!result.found)
        result.found = short_prism_from(g, remaining(), result.stats, truncated);

    result.stats.complete = result.found.has_value() || !truncated;
    return result;
}

bool verify_obstruction(const Graph& g, const Obstruction& o) {
    const int n = g.vertex_count();
    auto in_range = [&](int v) { return v >= 0 && v < n; };
    switch (o.kind) {
        case ObstructionKind::Claw: {
            if (!in_range(o.apex) || o.path.size() != 3) return false;
            for (int leaf : o.path)
                if (!in_range(leaf) || leaf == o.apex || !g.adjacent(o.apex, leaf)) return false;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (o.path[i] == o.path[j] || g.adjacent(o.path[i], o.path[j])) return false;
            return true;
        }
        case ObstructionKind::Jewel: {
            Hole h{o.hole};
            if (!is_hole(g, h) || !in_range(o.apex)) return false;
            VertexSet hs = h.vertex_set(n);
            if (hs.contains(o.apex)) return false;
            VertexSet want = VertexSet::of(n, {o.hole[0], o.hole[1], o.hole[2], o.hole[3]});
            return (g.neighbours(o.apex) & hs) == want;
        }
        case ObstructionKind::LineWheel: {
            Hole h{o.hole};
            const int k = h.length();
            if (k < 6 || !is_hole(g, h) || !in_range(o.apex)) return false;
            if (o.attach < 3 || o.attach > k - 3) return false;
            VertexSet hs = h.vertex_set(n);
            if (hs.contains(o.apex)) return false;
            VertexSet want = VertexSet::of(
                n, {o.hole[0], o.hole[1], o.hole[o.attach], o.hole[o.attach + 1]});
            return (g.neighbours(o.apex) & hs) == want;
        }
        case ObstructionKind::ShortPrism: {
            Hole h{o.hole};
            if (h.length() != 4 || !is_hole(g, h)) return false;
            if (o.path.empty() || !is_induced_path(g, o.path)) return false;
            VertexSet hs = h.vertex_set(n);
            for (int p : o.path)
                if (hs.contains(p)) return false;
            if (o.path.size() == 1) {
                VertexSet prof = g.neighbours(o.path[0]) & hs;
                return prof == hs;
            }
            VertexSet want_front = VertexSet::of(n, {o.hole[0], o.hole[1]});
            VertexSet want_back = VertexSet::of(n, {o.hole[2], o.hole[3]});
            if ((g.neighbours(o.path.front()) & hs) != want_front) return false;
            if ((g.neighbours(o.path.back()) & hs) != want_back) return false;
            for (std::size_t i = 1; i + 1 < o.path.size(); ++i)
                if ((g.neighbours(o.path[i]) & hs).count() != 0) return false;
            return true;
        }
        case ObstructionKind::SevenAntihole: {
            if (o.hole.size() != 7) return false;
            VertexSet seen(n);
            for (int v : o.hole) {
                if (!in_range(v) || seen.contains(v)) return false;
                seen.add(v);
            }
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j) {
                    bool consecutive = (j == i + 1) || (i == 0 && j == 6);
                    if (g.adjacent(o.hole[i], o.hole[j]) != !consecutive) return false;
                }
            return true;
        }
    }
    return false;
}

std::string hole_neighbour_tag_name(HoleNeighbourTag tag) {
    switch (tag) {
        case HoleNeighbourTag::Anticomplete: return "anticomplete";
        case HoleNeighbourTag::CompleteToC5: return "complete-to-C5";
        case HoleNeighbourTag::TwoConsecutive: return "two-consecutive";
        case HoleNeighbourTag::ThreeConsecutive: return "three-consecutive";
        case HoleNeighbourTag::Violation: return "violation";
    }
    return "?";
}

HoleNeighbourOutcome classify_hole_neighbours(const Graph& g, const Hole& h, int v) {
    if (!is_hole(g, h)) throw std::invalid_argument("not a hole of the graph");
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    VertexSet hs = h.vertex_set(g.vertex_count());
    if (hs.contains(v)) throw std::invalid_argument("vertex lies on the hole");

    VertexSet on_hole = g.neighbours(v) & hs;
    const int c = on_hole.count();
    const int k = h.length();
    HoleNeighbourTag tag = HoleNeighbourTag::Violation;
    if (c == 0) {
        tag = HoleNeighbourTag::Anticomplete;
    } else if (c == k && k == 5) {
        tag = HoleNeighbourTag::CompleteToC5;
    } else if (c == 2 || c == 3) {
        auto runs = cyclic_runs(hole_marks(h, on_hole));
        if (runs.size() == 1)
            tag = c == 2 ? HoleNeighbourTag::TwoConsecutive : HoleNeighbourTag::ThreeConsecutive;
    }
    return HoleNeighbourOutcome{tag, on_hole};
}

}  // namespace cleangraph
