#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bistellar/canon.hpp"
#include "bistellar/flips.hpp"
#include "bistellar/triangulation.hpp"

namespace bistellar {

struct SearchLimits {
  std::size_t max_classes = std::numeric_limits<std::size_t>::max();
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
};

struct ClassRecord {
  CanonicalForm form;
  std::size_t depth = 0;
  std::optional<std::size_t> parent;
  std::optional<FlipMove> via;  // applied to the parent's canonical representative
  bool seed = false;            // no legal 3-2 flip
};

struct ComponentReport {
  std::size_t class_count = 0;
  std::vector<CanonicalForm> seed_classes;  // in visit order
  bool frontier_exhausted = false;
  std::size_t max_depth = 0;
  std::vector<ClassRecord> classes;  // visit order; classes[0] is the start
};

struct FlipPath {
  CanonicalForm start;
  CanonicalForm end;
  std::vector<FlipMove> moves;  // replayable from the concrete start triangulation
};

// Breadth-first search over isomorphism classes reachable by `kinds`.
// Levels are expanded in visit order and merged in (parent, move) order, so
// the report is identical for every `threads` value.
ComponentReport bfs_component(const Triangulation& start, std::span<const FlipKind> kinds, SearchLimits limits = {},
                              std::size_t threads = 1);

bool is_seed(const Triangulation& t);
std::vector<CanonicalForm> find_seeds(const ComponentReport& report);

// True when the greedy 4-1 chain removes n-5 vertices, i.e. T is stacked.
bool is_stacked(const Triangulation& t);

// 2-3/3-2 path from T to a stacked sphere on the same vertex count.
std::optional<FlipPath> closure_certificate(const Triangulation& t, SearchLimits limits = {}, std::size_t threads = 1);

std::optional<FlipPath> shortest_path(const Triangulation& a, const Triangulation& b, std::span<const FlipKind> kinds,
                                      SearchLimits limits = {}, std::size_t threads = 1);

}  // namespace bistellar
