#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bistellar/flips.hpp"
#include "bistellar/triangulation.hpp"

namespace bistellar {

enum class ObjectiveKind { Reduction, StackedPotential };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::Reduction;
  // StackedPotential only; defaults to s_max + 1 and must not be smaller.
  std::optional<std::int64_t> weight;

  static Objective reduction() { return {ObjectiveKind::Reduction, std::nullopt}; }
  static Objective stacked(std::optional<std::int64_t> w = std::nullopt) {
    return {ObjectiveKind::StackedPotential, w};
  }
};

struct AnnealConfig {
  double initial_temperature = 0.0;  // <= 0 selects 3 * s_max (at least 1) for StackedPotential, 1 for Reduction
  double cooling_factor = 0.99;
  std::size_t steps_per_temperature = 200;
  std::size_t max_flips = 100000;  // proposals, accepted or not
  std::uint64_t rng_seed = 1;
  std::vector<FlipKind> allowed_kinds;  // empty selects the objective's kinds

  void validate() const;  // throws std::invalid_argument
};

struct AnnealResult {
  Triangulation final;
  std::vector<FlipMove> trace;  // replays from the input to `final`
  std::int64_t best_cost = 0;
  bool success = false;
  std::size_t proposals = 0;
  std::size_t accepted = 0;
};

// Number of 4-1 flips performed by repeatedly removing the lowest-labeled
// removable vertex, with no other flips interleaved.
std::size_t stacked_potential(const Triangulation& t);
// The greedy chain itself (the removed vertices, in order).
std::vector<Vertex> greedy_removal_chain(const Triangulation& t);

// Longest 4-1 chain over all removal orders. Exponential; intended for
// comparisons against the greedy value on small inputs.
std::size_t stacked_potential_max(const Triangulation& t);

// (s_max - s(T)) * W + m(T) with s_max = n - 5. Throws std::invalid_argument
// when W < s_max + 1 or n < 5.
std::int64_t stacked_cost(const Triangulation& t, std::size_t n, std::optional<std::int64_t> weight = std::nullopt);

struct Preparation {
  Triangulation result;
  Vertex new_vertex = 0;
  std::vector<FlipMove> moves;  // the 1-4 followed by the link-expanding 2-3 flips
  std::size_t expanding_flips = 0;
  std::size_t link_size = 0;  // distinct vertices in link(new_vertex)
};

// One 1-4 into the lexicographically first facet, then 2-3 flips on link
// triangles of the new vertex whose far apex is not yet its neighbour, until
// every original vertex is in the link. Link triangles are tried in
// lexicographic order, backtracking out of branches that stall. Throws
// PreparationStalled (with the largest link reached) when no order succeeds.
Preparation prepare_unflippable(const Triangulation& t);

AnnealResult run(const Triangulation& t, const Objective& objective, const AnnealConfig& config);

// Prepares (when no 2-3 or 3-2 flip is legal) and then anneals with the
// Reduction objective. Success means the final complex is the boundary of the
// 4-simplex, which certifies a PL 3-sphere.
AnnealResult reduce_to_simplex(const Triangulation& t, const AnnealConfig& config);

}  // namespace bistellar
