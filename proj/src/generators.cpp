#include "bistellar/generators.hpp"

#include <random>
#include <stdexcept>

#include "bistellar/rng.hpp"

namespace bistellar {

Triangulation boundary_simplex() {
  return Triangulation::from_facets({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
}

Triangulation stacked_sphere(std::size_t n, std::uint64_t seed) {
  if (n < 5) throw std::invalid_argument("stacked sphere needs n >= 5");
  Rng rng(seed);
  Triangulation t = boundary_simplex();
  for (std::size_t v = 6; v <= n; ++v) {
    const auto& facets = t.facets();
    const auto pick = uniform_index(rng, facets.size());
    t = apply(t, FlipMove::one_four(facets[pick], static_cast<Vertex>(v)));
  }
  return t;
}

Triangulation cyclic_sphere(std::size_t n) {
  if (n < 5 || n > 64) throw std::invalid_argument("cyclic sphere needs 5 <= n <= 64");
  std::vector<Facet> facets;
  const auto N = static_cast<Vertex>(n);
  for (Vertex a = 1; a <= N; ++a)
    for (Vertex b = a + 1; b <= N; ++b)
      for (Vertex c = b + 1; c <= N; ++c)
        for (Vertex d = c + 1; d <= N; ++d) {
          const Facet f{a, b, c, d};
          // Gale evenness: between any two non-members the member count is even.
          bool even = true;
          for (Vertex i = 1; i <= N && even; ++i) {
            if (i == a || i == b || i == c || i == d) continue;
            for (Vertex j = i + 1; j <= N && even; ++j) {
              if (j == a || j == b || j == c || j == d) continue;
              int between = 0;
              for (Vertex x : f) between += (x > i && x < j);
              even = (between % 2 == 0);
            }
          }
          if (even) facets.push_back(f);
        }
  return Triangulation::from_facets(std::move(facets));
}

WalkResult random_walk_trace(const Triangulation& t, std::span<const FlipKind> kinds, std::size_t steps,
                             std::uint64_t seed) {
  Rng rng(seed);
  WalkResult out{t, {}, false};
  for (std::size_t s = 0; s < steps; ++s) {
    auto moves = enumerate_moves(out.final, kinds);
    if (moves.empty()) {
      out.stalled = true;
      break;
    }
    const auto& m = moves[uniform_index(rng, moves.size())];
    out.final = apply(out.final, m);
    out.moves.push_back(m);
  }
  return out;
}

Triangulation random_walk(const Triangulation& t, std::span<const FlipKind> kinds, std::size_t steps,
                          std::uint64_t seed) {
  return random_walk_trace(t, kinds, steps, seed).final;
}

}  // namespace bistellar
