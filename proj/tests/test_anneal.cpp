#include <doctest.h>

#include <random>

#include "bistellar/anneal.hpp"
#include "bistellar/error.hpp"
#include "bistellar/io.hpp"
#include "fixtures.hpp"

using namespace bistellar;
using fixtures::stacked6;

namespace {

// Greedy chain by repeated whole-complex rebuilds.
std::size_t slow_potential(Triangulation t) {
  std::size_t s = 0;
  for (;;) {
    auto it = std::find_if(t.vertices().begin(), t.vertices().end(), [&](Vertex v) { return legal_41(t, v); });
    if (it == t.vertices().end()) return s;
    t = apply(t, FlipMove::four_one(*it));
    ++s;
  }
}

}  // namespace

TEST_CASE("stacked potential") {
  CHECK(stacked_potential(boundary_simplex()) == 0);
  CHECK(stacked_potential(stacked6()) == 1);
  CHECK(stacked_potential(fixtures::cyclic6()) == 0);
  for (std::size_t n = 5; n <= 14; ++n) CHECK(stacked_potential(stacked_sphere(n, n)) == n - 5);
  CHECK(greedy_removal_chain(stacked6()) == std::vector<Vertex>{5});
}

TEST_CASE("property: greedy chain matches the rebuild oracle") {
  for (const auto& t : fixtures::corpus()) {
    CHECK(stacked_potential(t) == slow_potential(t));
    CHECK(stacked_potential(t) <= stacked_potential_max(t));
  }
  constexpr std::array mixed{FlipKind::OneFour, FlipKind::TwoThree, FlipKind::ThreeTwo};
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const auto t = random_walk(boundary_simplex(), mixed, 25, s);
    CHECK(stacked_potential(t) == slow_potential(t));
  }
}

TEST_CASE("stacked cost") {
  CHECK(stacked_cost(stacked6(), 6) == 8);
  CHECK(stacked_cost(fixtures::cyclic6(), 6) == 11);
  CHECK(stacked_cost(boundary_simplex(), 5) == 5);
  CHECK(stacked_cost(fixtures::cyclic6(), 6, 7) == 16);
  CHECK_THROWS_AS(stacked_cost(fixtures::cyclic6(), 6, 1), std::invalid_argument);
  CHECK_THROWS_AS(stacked_cost(fixtures::cyclic6(), 4), std::invalid_argument);
}

TEST_CASE("preparation") {
  const auto p = prepare_unflippable(boundary_simplex());
  CHECK(p.new_vertex == 6);
  CHECK(p.expanding_flips == 1);
  CHECK(p.link_size == 5);
  CHECK(p.moves.front() == FlipMove::one_four({1, 2, 3, 4}, 6));
  CHECK(replay(boundary_simplex(), p.moves) == p.result);

  const auto q = prepare_unflippable(stacked6());
  CHECK(q.expanding_flips == 2);
  CHECK(q.result.neighbors(q.new_vertex).size() == 6);

  // The first-triangle order alone stalls one vertex short here.
  const auto t = stacked_sphere(10, 1);
  const auto r = prepare_unflippable(t);
  CHECK(r.expanding_flips == 6);
  CHECK(r.link_size == 10);
  CHECK(replay(t, r.moves) == r.result);
}

TEST_CASE("annealing runs") {
  AnnealConfig config;
  SUBCASE("reduction of a stacked sphere") {
    const auto t = stacked_sphere(8, 2);
    const auto r = run(t, Objective::reduction(), config);
    CHECK(r.success);
    CHECK(are_isomorphic(r.final, boundary_simplex()));
    CHECK(replay(t, r.trace) == r.final);
  }
  SUBCASE("stacked objective on the cyclic 6-sphere") {
    const auto r = run(fixtures::cyclic6(), Objective::stacked(), config);
    CHECK(r.success);
    CHECK(r.best_cost == 8);
    CHECK(stacked_potential(r.final) == 1);
    CHECK(replay(fixtures::cyclic6(), r.trace) == r.final);
  }
  SUBCASE("seeded runs repeat exactly") {
    const auto t = cyclic_sphere(9);
    config.rng_seed = 17;
    const auto a = run(t, Objective::stacked(), config);
    const auto b = run(t, Objective::stacked(), config);
    CHECK(a.trace == b.trace);
    CHECK(a.final == b.final);
  }
  SUBCASE("bad configuration") {
    config.cooling_factor = 1.5;
    CHECK_THROWS_AS(run(fixtures::cyclic6(), Objective::stacked(), config), std::invalid_argument);
  }
}

TEST_CASE("stochastic: random walk from stacked 9-sphere, stacked objective") {
  int ok = 0;
  for (std::uint64_t s = 1; s <= 100; ++s) {
    const auto start = random_walk(stacked_sphere(9, s), kVertexPreserving, 100, s);
    AnnealConfig config;
    config.rng_seed = s;
    const auto r = run(start, Objective::stacked(), config);
    ok += r.success;
    CHECK(replay(start, r.trace) == r.final);
  }
  CHECK(ok >= 95);
}

TEST_CASE("reduce to simplex") {
  AnnealConfig config;
  const auto s = reduce_to_simplex(boundary_simplex(), config);
  CHECK(s.success);
  CHECK(s.trace.empty());

  for (std::size_t n = 6; n <= 10; ++n) {
    for (const auto& t : {stacked_sphere(n, n), cyclic_sphere(n)}) {
      const auto r = reduce_to_simplex(t, config);
      CHECK(r.success);
      CHECK(replay(t, r.trace) == r.final);
    }
  }

  config.max_flips = 3000;
  const auto rp3 = load_triangulation(std::string(BISTELLAR_TEST_DATA) + "/rp3.facets");
  const auto r = reduce_to_simplex(rp3, config);
  CHECK_FALSE(r.success);
  CHECK(replay(rp3, r.trace) == r.final);
}
