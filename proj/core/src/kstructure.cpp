#include "cleangraph/kstructure.hpp"

#include <sstream>
#include <stdexcept>

namespace cleangraph {

VertexSet KStructure::union_set() const {
    VertexSet w = classes.empty() ? VertexSet() : VertexSet(classes[0].universe());
    for (const auto& c : classes) w |= c;
    return w;
}

std::string KStructureViolation::describe() const {
    std::ostringstream out;
    switch (rule) {
        case Rule::ClassEmptyOrNotClique:
            out << "class " << class_a << " is empty or not a clique";
            if (u >= 0) out << " (" << u << " and " << v << " non-adjacent)";
            break;
        case Rule::MissingNeighbour:
            out << "vertex " << u << " of class " << class_a << " has no neighbour in class "
                << class_b;
            break;
        case Rule::NotAnticomplete:
            out << "classes " << class_a << " and " << class_b << " are not anticomplete ("
                << u << " adjacent to " << v << ")";
            break;
    }
    return out.str();
}

std::optional<KStructureViolation> verify_k_structure(const Graph& g, const KStructure& ks) {
    const int k = ks.k();
    if (k < 4) throw std::invalid_argument("k-structure needs at least 4 classes");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (ks.classes[i].intersects(ks.classes[j]))
                throw std::invalid_argument("k-structure classes overlap");

    for (int i = 0; i < k; ++i) {
        const VertexSet& c = ks.classes[i];
        if (c.empty())
            return KStructureViolation{KStructureViolation::Rule::ClassEmptyOrNotClique, i, -1,
                                       -1, -1};
        for (int u : c) {
            VertexSet rest = c - g.neighbours(u);
            rest.remove(u);
            if (!rest.empty())
                return KStructureViolation{KStructureViolation::Rule::ClassEmptyOrNotClique, i,
                                           -1, u, rest.first()};
        }
    }
    for (int i = 0; i < k; ++i) {
        int prev = (i + k - 1) % k, next = (i + 1) % k;
        for (int u : ks.classes[i]) {
            if (!g.neighbours(u).intersects(ks.classes[prev]))
                return KStructureViolation{KStructureViolation::Rule::MissingNeighbour, i, prev,
                                           u, -1};
            if (!g.neighbours(u).intersects(ks.classes[next]))
                return KStructureViolation{KStructureViolation::Rule::MissingNeighbour, i, next,
                                           u, -1};
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (j == i + 1 || (i == 0 && j == k - 1)) continue;
            for (int u : ks.classes[i]) {
                VertexSet hits = g.neighbours(u) & ks.classes[j];
                if (!hits.empty())
                    return KStructureViolation{KStructureViolation::Rule::NotAnticomplete, i, j,
                                               u, hits.first()};
            }
        }
    return std::nullopt;
}

bool can_insert(const Graph& g, const KStructure& ks, int v, int class_index) {
    const int k = ks.k();
    const int i = class_index;
    const VertexSet& nb = g.neighbours(v);
    if (!ks.classes[i].is_subset_of(nb)) return false;
    if (!nb.intersects(ks.classes[(i + k - 1) % k])) return false;
    if (!nb.intersects(ks.classes[(i + 1) % k])) return false;
    for (int j = 0; j < k; ++j) {
        if (j == i || j == (i + 1) % k || j == (i + k - 1) % k) continue;
        if (nb.intersects(ks.classes[j])) return false;
    }
    return true;
}

KStructure grow_k_structure(const Graph& g, const Hole& h) {
    if (!is_hole(g, h)) throw std::invalid_argument("not a hole of the graph");
    const int n = g.vertex_count();
    KStructure ks;
    for (int v : h.vertices) ks.classes.push_back(VertexSet::of(n, {v}));

    VertexSet w = h.vertex_set(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (w.contains(v)) continue;
            for (int i = 0; i < ks.k(); ++i) {
                if (!can_insert(g, ks, v, i)) continue;
                ks.classes[i].add(v);
                w.add(v);
                changed = true;
                break;
            }
        }
    }
    return ks;
}

ProbeTrace probe_trace(const Graph& g, const KStructure& ks, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("probe out of range");
    if (ks.union_set().contains(v)) throw std::invalid_argument("probe lies in the structure");
    ProbeTrace t;
    t.probe = v;
    for (const auto& c : ks.classes) {
        t.hit.push_back(c & g.neighbours(v));
        t.missed.push_back(c - g.neighbours(v));
    }
    return t;
}

std::vector<VertexSet> fringe_classes(const Graph& g, const KStructure& ks) {
    const int n = g.vertex_count();
    const int k = ks.k();
    VertexSet w = ks.union_set();
    std::vector<VertexSet> fringe(k, VertexSet(n));
    for (int v = 0; v < n; ++v) {
        if (w.contains(v)) continue;
        const VertexSet& nb = g.neighbours(v);
        for (int i = 0; i < k; ++i) {
            int next = (i + 1) % k;
            if (!nb.intersects(ks.classes[i]) || !nb.intersects(ks.classes[next])) continue;
            VertexSet elsewhere = (nb & w) - ks.classes[i] - ks.classes[next];
            if (elsewhere.empty()) fringe[i].add(v);
        }
    }
    return fringe;
}

std::string structure_claim_name(StructureClaim claim) {
    switch (claim) {
        case StructureClaim::ContainmentFlip: return "containment-flip";
        case StructureClaim::NextClassComparable: return "next-class-comparable";
        case StructureClaim::CompleteToNeighbourClass: return "complete-to-neighbour-class";
        case StructureClaim::OnePerClassPaths: return "one-per-class-paths";
        case StructureClaim::ProbeSplit: return "probe-split";
        case StructureClaim::ProbeWindow: return "probe-window";
        case StructureClaim::FringeCliques: return "fringe-cliques";
    }
    return "?";
}

bool StructureClaimReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

const ClaimResult& StructureClaimReport::result(StructureClaim claim) const {
    for (const auto& r : results)
        if (r.claim == claim) return r;
    throw std::logic_error("claim missing from report");
}

namespace {

std::string probe_witness(int v, int i, const char* what) {
    std::ostringstream out;
    out << "probe " << v << ", class " << i << ": " << what;
    return out.str();
}

ClaimResult check_containment_flip(const Graph& g, const KStructure& ks) {
    const int k = ks.k();
    for (int i = 0; i < k; ++i) {
        int prev = (i + k - 1) % k, next = (i + 1) % k;
        for (int a : ks.classes[i])
            for (int b : ks.classes[i]) {
                if (a == b) continue;
                VertexSet a_next = g.neighbours(a) & ks.classes[next];
                VertexSet b_next = g.neighbours(b) & ks.classes[next];
                if (b_next.is_subset_of(a_next)) continue;
                VertexSet a_prev = g.neighbours(a) & ks.classes[prev];
                VertexSet b_prev = g.neighbours(b) & ks.classes[prev];
                if (!b_prev.is_subset_of(a_prev)) {
                    std::ostringstream out;
                    out << "class " << i << ", a=" << a << ", b=" << b
                        << ": b escapes a towards both neighbour classes";
                    return {StructureClaim::ContainmentFlip, false, out.str()};
                }
            }
    }
    return {StructureClaim::ContainmentFlip, true, {}};
}

ClaimResult check_next_comparable(const Graph& g, const KStructure& ks) {
    const int k = ks.k();
    for (int i = 0; i < k; ++i) {
        int next = (i + 1) % k;
        auto members = ks.classes[i].elements();
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                VertexSet a_next = g.neighbours(members[x]) & ks.classes[next];
                VertexSet b_next = g.neighbours(members[y]) & ks.classes[next];
                if (!a_next.is_subset_of(b_next) && !b_next.is_subset_of(a_next)) {
                    std::ostringstream out;
                    out << "class " << i << ": " << members[x] << " and " << members[y]
                        << " have incomparable neighbourhoods in class " << next;
                    return {StructureClaim::NextClassComparable, false, out.str()};
                }
            }
    }
    return {StructureClaim::NextClassComparable, true, {}};
}

ClaimResult check_complete_side(const Graph& g, const KStructure& ks) {
    const int k = ks.k();
    for (int i = 0; i < k; ++i) {
        int prev = (i + k - 1) % k, next = (i + 1) % k;
        if (!is_complete_between(g, ks.classes[i], ks.classes[prev]) &&
            !is_complete_between(g, ks.classes[i], ks.classes[next])) {
            std::ostringstream out;
            out << "class " << i << " is complete to neither neighbour class";
            return {StructureClaim::CompleteToNeighbourClass, false, out.str()};
        }
    }
    return {StructureClaim::CompleteToNeighbourClass, true, {}};
}

ClaimResult check_one_per_class_paths(const Graph& g, const KStructure& ks) {
    const int k = ks.k();
    for (int j = 0; j < k; ++j)
        for (int a : ks.classes[j]) {
            VertexSet reach = VertexSet::of(g.vertex_count(), {a});
            for (int step = 1; step <= k - 2; ++step) {
                const VertexSet& layer = ks.classes[(j + step) % k];
                VertexSet nxt(g.vertex_count());
                for (int u : reach) nxt |= g.neighbours(u) & layer;
                reach = nxt;
                if (step < 2) continue;
                VertexSet missing = layer - reach;
                if (!missing.empty()) {
                    std::ostringstream out;
                    out << "no one-per-class path from " << a << " (class " << j << ") to "
                        << missing.first() << " (class " << (j + step) % k << ")";
                    return {StructureClaim::OnePerClassPaths, false, out.str()};
                }
            }
        }
    return {StructureClaim::OnePerClassPaths, true, {}};
}

ClaimResult check_probe_split(const Graph& g, const KStructure& ks, const VertexSet& w) {
    const int k = ks.k();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (w.contains(v)) continue;
        ProbeTrace t = probe_trace(g, ks, v);
        for (int i = 0; i < k; ++i) {
            int prev = (i + k - 1) % k, next = (i + 1) % k;
            if (!is_anticomplete_between(g, t.hit[i], t.missed[prev]) &&
                !is_anticomplete_between(g, t.hit[i], t.missed[next]))
                return {StructureClaim::ProbeSplit, false,
                        probe_witness(v, i, "hit part meets both missed neighbour parts")};
            if (k > 4 && !is_anticomplete_between(g, t.missed[i], t.hit[prev]) &&
                !is_anticomplete_between(g, t.missed[i], t.hit[next]))
                return {StructureClaim::ProbeSplit, false,
                        probe_witness(v, i, "missed part meets both hit neighbour parts")};
        }
    }
    return {StructureClaim::ProbeSplit, true, {}};
}

ClaimResult check_probe_window(const Graph& g, const KStructure& ks, const VertexSet& w) {
    const int k = ks.k();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (w.contains(v)) continue;
        const VertexSet& nb = g.neighbours(v);
        std::vector<int> support;
        for (int i = 0; i < k; ++i)
            if (nb.intersects(ks.classes[i])) support.push_back(i);

        bool window_ok = support.size() <= 1;
        if (support.size() == 2) {
            int d = support[1] - support[0];
            window_ok = d == 1 || d == k - 1;
        }
        if (window_ok) continue;

        bool exception_ok = k == 5 && w.is_subset_of(nb);
        for (int i = 0; exception_ok && i < 4; ++i)
            exception_ok = is_complete_between(g, ks.classes[i], ks.classes[i + 1]);
        if (!exception_ok) {
            std::ostringstream out;
            out << "probe " << v << " has neighbours in " << support.size()
                << " classes, not two consecutive ones";
            return {StructureClaim::ProbeWindow, false, out.str()};
        }
    }
    return {StructureClaim::ProbeWindow, true, {}};
}

ClaimResult check_fringe(const Graph& g, const KStructure& ks, const VertexSet& w) {
    const int k = ks.k();
    auto fringe = fringe_classes(g, ks);

    VertexSet complete_probes(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!w.contains(v) && w.is_subset_of(g.neighbours(v))) complete_probes.add(v);

    for (int i = 0; i < k; ++i) {
        if (fringe[i].empty()) continue;
        int next = (i + 1) % k, prev = (i + k - 1) % k;
        VertexSet block = ks.classes[i] | ks.classes[next] | fringe[i];
        if (!is_clique(g, block)) {
            std::ostringstream out;
            out << "classes " << i << "," << next << " plus their fringe are not a clique";
            return {StructureClaim::FringeCliques, false, out.str()};
        }
        if (!is_anticomplete_between(g, complete_probes, fringe[i])) {
            std::ostringstream out;
            out << "a probe complete to W meets the fringe of classes " << i << "," << next;
            return {StructureClaim::FringeCliques, false, out.str()};
        }
        if (!is_anticomplete_between(g, fringe[i], fringe[prev])) {
            std::ostringstream out;
            out << "fringe of classes " << i << "," << next << " meets the previous fringe";
            return {StructureClaim::FringeCliques, false, out.str()};
        }
    }
    return {StructureClaim::FringeCliques, true, {}};
}

}  // namespace

StructureClaimReport check_structure_claims(const Graph& g, const KStructure& ks) {
    if (auto bad = verify_k_structure(g, ks))
        throw std::invalid_argument("not a k-structure: " + bad->describe());
    VertexSet w = ks.union_set();
    StructureClaimReport report;
    report.results.push_back(check_containment_flip(g, ks));
    report.results.push_back(check_next_comparable(g, ks));
    report.results.push_back(check_complete_side(g, ks));
    report.results.push_back(check_one_per_class_paths(g, ks));
    report.results.push_back(check_probe_split(g, ks, w));
    report.results.push_back(check_probe_window(g, ks, w));
    report.results.push_back(check_fringe(g, ks, w));
    return report;
}

}  // namespace cleangraph
