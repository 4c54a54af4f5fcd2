#pragma once

#include "cleangraph/graph.hpp"

#include <cstdint>
#include <optional>

namespace cleangraph {

Graph cycle(int n);  // n >= 3

// Complement of an odd cycle, n odd >= 7: claw-free with no simplicial clique.
Graph complement_cycle(int n);

// Square of a cycle (i adjacent to i+-1 and i+-2), n >= 9: claw-free,
// 4-hole-free, no simplicial clique.
Graph cycle_square(int n);

// Cycle a_0..a_{k-1} plus one hat per position: hat b_i is adjacent to
// a_{i-1}, a_i, a_{i+1} and nothing else. Vertices interleave as a_i -> 2i,
// b_i -> 2i+1. For odd k >= 5 this is even-hole-free with no simplicial
// clique (and necessarily contains a claw); k = 3 degenerates into a
// complete split graph whose hats are simplicial. k odd >= 3.
Graph hat_cycle(int k);

// Hole 0..hole_length-1 plus an apex adjacent to hole vertices 0,1,2,3.
Graph jewel_graph(int hole_length);  // hole_length >= 4

// Hole 0..hole_length-1 plus an apex adjacent to hole vertices
// {0, 1, attach, attach+1}; 3 <= attach <= hole_length-3, hole_length >= 6.
Graph line_wheel_graph(int hole_length, int attach);

// 4-hole 0-1-2-3 plus a path 4..3+path_length; its first vertex attaches to
// hole vertices 0,1 and its last to 2,3. path_length >= 1 (the single-vertex
// case is adjacent to all four).
Graph short_prism_graph(int path_length);

Graph seven_antihole_graph();

// Bit-mixing finaliser; the basis of all randomness here.
std::uint64_t splitmix64(std::uint64_t x);

// Counter-based draw in [0, 1): one independent value per (seed, counter)
// pair, identical on every platform, usable in any order.
double unit_real(std::uint64_t seed, std::uint64_t counter);

// n points sampled uniformly in [0,1); vertices within `density` of each
// other are adjacent. Unit interval graphs are chordal and claw-free, hence
// clean. Deterministic across platforms for a fixed seed.
Graph random_unit_interval(int n, double density, std::uint64_t seed);

// Erdos-Renyi sample with the same counter-based generator.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

struct RandomCleanResult {
    std::optional<Graph> graph;
    int tries = 0;
};

// Rejection-samples random graphs until one is clean; empty after max_tries.
RandomCleanResult random_clean(int n, double edge_prob, std::uint64_t seed, int max_tries = 100);

}  // namespace cleangraph
