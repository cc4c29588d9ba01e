#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bistellar/canon.hpp"
#include "bistellar/flips.hpp"
#include "bistellar/generators.hpp"
#include "bistellar/triangulation.hpp"
#include "oracle/oracle.hpp"

namespace fixtures {

using namespace bistellar;

inline Triangulation simplex() { return boundary_simplex(); }

// One 1-4 flip into {1,2,3,4} with new vertex 6.
inline Triangulation stacked6() { return apply(boundary_simplex(), FlipMove::one_four({1, 2, 3, 4}, 6)); }

inline Triangulation cyclic6() { return cyclic_sphere(6); }

// Generator output across sizes and shapes.
inline std::vector<Triangulation> corpus() {
  std::vector<Triangulation> out{boundary_simplex(), stacked6(), cyclic6()};
  for (std::size_t n = 6; n <= 11; ++n) {
    out.push_back(stacked_sphere(n, n));
    out.push_back(cyclic_sphere(n));
  }
  constexpr std::array mixed{FlipKind::OneFour, FlipKind::TwoThree};
  for (std::uint64_t s = 1; s <= 4; ++s) out.push_back(random_walk(boundary_simplex(), mixed, 12, s));
  out.push_back(random_walk(cyclic_sphere(8), kVertexPreserving, 30, 7));
  return out;
}

// Sends the vertices to distinct random labels in 1..limit.
inline Triangulation random_relabel(const Triangulation& t, std::mt19937_64& rng, Vertex limit = 1000) {
  std::vector<Vertex> pool(limit);
  std::iota(pool.begin(), pool.end(), Vertex{1});
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Facet> facets;
  auto map = [&](Vertex v) {
    const auto i = std::lower_bound(t.vertices().begin(), t.vertices().end(), v) - t.vertices().begin();
    return pool[static_cast<std::size_t>(i)];
  };
  for (const auto& f : t.facets()) facets.push_back({map(f[0]), map(f[1]), map(f[2]), map(f[3])});
  return Triangulation::from_facets(std::move(facets));
}

inline oracle::FacetList as_list(const Triangulation& t) { return {t.facets().begin(), t.facets().end()}; }

}  // namespace fixtures
