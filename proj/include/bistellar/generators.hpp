#pragma once

#include <cstdint>
#include <span>

#include "bistellar/flips.hpp"
#include "bistellar/triangulation.hpp"

namespace bistellar {

// Boundary of the 4-simplex on {1..5}.
Triangulation boundary_simplex();

// Boundary of the 4-simplex followed by n-5 one-four flips, each into a
// facet chosen uniformly with the seeded generator. New vertices get 6, 7, ...
Triangulation stacked_sphere(std::size_t n, std::uint64_t seed);

// Boundary of the cyclic 4-polytope C(n,4) via Gale's evenness condition.
Triangulation cyclic_sphere(std::size_t n);

struct WalkResult {
  Triangulation final;
  std::vector<FlipMove> moves;
  bool stalled = false;  // a state with no legal move ended the walk early
};

// `steps` moves chosen uniformly among the legal moves of `kinds`.
WalkResult random_walk_trace(const Triangulation& t, std::span<const FlipKind> kinds, std::size_t steps,
                             std::uint64_t seed);
Triangulation random_walk(const Triangulation& t, std::span<const FlipKind> kinds, std::size_t steps,
                          std::uint64_t seed);

}  // namespace bistellar
