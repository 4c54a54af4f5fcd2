#include "cleangraph/fixtures.hpp"

#include "cleangraph/recognizers.hpp"

#include <stdexcept>

namespace cleangraph {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_real(std::uint64_t seed, std::uint64_t counter) {
    return double(splitmix64(splitmix64(seed) ^ counter) >> 11) * 0x1.0p-53;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complement_cycle(int n) {
    if (n < 7 || n % 2 == 0)
        throw std::invalid_argument("complement_cycle needs odd n >= 7");
    return cycle(n).complement();
}

Graph cycle_square(int n) {
    if (n < 9) throw std::invalid_argument("cycle_square needs n >= 9");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, (i + 2) % n);
    }
    return Graph::from_edges(n, edges);
}

Graph hat_cycle(int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("hat_cycle needs odd k >= 3");
    auto a = [](int i) { return 2 * i; };
    auto b = [](int i) { return 2 * i + 1; };
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        int next = (i + 1) % k;
        edges.emplace_back(a(i), a(next));
        edges.emplace_back(b(i), a(i));
        edges.emplace_back(b(i), a(next));
        edges.emplace_back(b(next), a(i));
    }
    return Graph::from_edges(2 * k, edges);
}

Graph jewel_graph(int hole_length) {
    if (hole_length < 4) throw std::invalid_argument("jewel needs a hole of length >= 4");
    std::vector<Edge> edges;
    for (int i = 0; i < hole_length; ++i) edges.emplace_back(i, (i + 1) % hole_length);
    for (int i = 0; i < 4; ++i) edges.emplace_back(hole_length, i);
    return Graph::from_edges(hole_length + 1, edges);
}

Graph line_wheel_graph(int hole_length, int attach) {
    if (hole_length < 6)
        throw std::invalid_argument("line wheel needs a hole of length >= 6");
    if (attach < 3 || attach > hole_length - 3)
        throw std::invalid_argument("line wheel attach index out of range");
    std::vector<Edge> edges;
    for (int i = 0; i < hole_length; ++i) edges.emplace_back(i, (i + 1) % hole_length);
    int apex = hole_length;
    edges.emplace_back(apex, 0);
    edges.emplace_back(apex, 1);
    edges.emplace_back(apex, attach);
    edges.emplace_back(apex, attach + 1);
    return Graph::from_edges(hole_length + 1, edges);
}

Graph short_prism_graph(int path_length) {
    if (path_length < 1) throw std::invalid_argument("short prism needs a path of length >= 1");
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    int first = 4, last = 3 + path_length;
    for (int p = first; p < last; ++p) edges.emplace_back(p, p + 1);
    edges.emplace_back(first, 0);
    edges.emplace_back(first, 1);
    edges.emplace_back(last, 2);
    edges.emplace_back(last, 3);
    return Graph::from_edges(4 + path_length, edges);
}

Graph seven_antihole_graph() { return complement_cycle(7); }

Graph random_unit_interval(int n, double density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (density < 0) throw std::invalid_argument("density must be non-negative");
    std::vector<double> point(n);
    for (int i = 0; i < n; ++i) point[i] = unit_real(seed, std::uint64_t(i));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = point[i] - point[j];
            if ((d < 0 ? -d : d) <= density) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("need n >= 0");
    std::vector<Edge> edges;
    std::uint64_t counter = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++counter)
            if (unit_real(seed, counter) < edge_prob) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

RandomCleanResult random_clean(int n, double edge_prob, std::uint64_t seed, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_graph(n, edge_prob, splitmix64(seed) + std::uint64_t(t));
        if (find_clean_obstruction(g).definitive_none()) return {std::move(g), t + 1};
    }
    return {std::nullopt, max_tries};
}

}  // namespace cleangraph
