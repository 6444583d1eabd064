#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccx/duality_types.hpp"
#include "ccx/graph.hpp"

namespace ccx {

CubeGraph make_cube(int dim);
CubeGraph make_path(int n);
CubeGraph make_grid(int a, int b);
CubeGraph make_star(int leaves);

// Uniform random attachment tree, deterministic per seed.
CubeGraph make_random_tree(int n, std::uint64_t seed);

// Coset tree of the chain (Z/2) < (Z/2)^2 < ... < (Z/2)^depth: one vertex
// per coset of each subgroup in the full group, levels joined by
// inclusion. Level j has 2^(depth-j) vertices; level `depth` is the root.
CubeGraph make_coset_tree(int depth);
// Vertex id of the level-j coset with upper-coordinate value b.
int coset_tree_vertex(int depth, int level, int b);

// m distinct perpendicular-bisector walls over k planted integer planar
// points. Deterministic per seed; both wall sides are nonempty.
Wallspace make_random_wallspace(int k, int m, std::uint64_t seed);

// PRNG helper shared by the generators: bounded splitmix64 draw with
// rejection, stable across platforms.
std::uint64_t bounded_rand(std::uint64_t& state_hi, std::uint64_t bound);

// Vertex maps generating the full symmetry groups of the named families:
// signed coordinate permutations for cubes, axis flips for grids (plus the
// transpose when square), the end swap for paths, and child-subtree swaps
// at every internal node for coset trees.
std::vector<std::vector<int>> cube_symmetry_generators(int dim);
std::vector<std::vector<int>> grid_symmetry_generators(int a, int b, bool with_transpose);
std::vector<int> path_end_swap(int n);
std::vector<std::vector<int>> coset_tree_symmetry_generators(int depth);

}  // namespace ccx
