#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace bistellar;
using fixtures::stacked6;

TEST_CASE("simplex under all relabelings") {
  const auto simplex = boundary_simplex();
  const auto reference = canonical_form(simplex);
  std::array<Vertex, 5> p{1, 2, 3, 4, 5};
  std::size_t seen = 0;
  do {
    std::vector<Facet> f;
    for (const auto& x : simplex.facets()) f.push_back({p[x[0] - 1], p[x[1] - 1], p[x[2] - 1], p[x[3] - 1]});
    CHECK(canonical_form(Triangulation::from_facets(f)) == reference);
    ++seen;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(seen == 120);
  CHECK(reference.facets == boundary_simplex().facets());
}

TEST_CASE("stacked 6-sphere under (1 5)(2 6)") {
  const std::array<Vertex, 7> swap{0, 5, 6, 3, 4, 1, 2};
  const auto t = stacked6();
  std::vector<Facet> f;
  for (const auto& x : t.facets()) f.push_back({swap[x[0]], swap[x[1]], swap[x[2]], swap[x[3]]});
  auto image = Triangulation::from_facets(f);
  CHECK(image != stacked6());
  CHECK(canonical_form(image) == canonical_form(stacked6()));
  CHECK(are_isomorphic(image, stacked6()));
}

TEST_CASE("non-isomorphic spheres differ") {
  CHECK(canonical_form(stacked6()) != canonical_form(fixtures::cyclic6()));
  CHECK_FALSE(are_isomorphic(stacked6(), fixtures::cyclic6()));
  CHECK(are_isomorphic(stacked6(), stacked6()));
}

TEST_CASE("digest") {
  const auto cf = canonical_form(boundary_simplex());
  CHECK(cf.hash == facet_digest(cf.facets));
  CHECK(facet_digest({}) == 0xcbf29ce484222325ULL);
  // FNV-1a of the bytes 01 00 00 00.
  const std::vector<Facet> one{{1, 0, 0, 0}};
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int b : {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) {
    h ^= static_cast<std::uint64_t>(b);
    h *= 0x100000001b3ULL;
  }
  CHECK(facet_digest(one) == h);
}

TEST_CASE("labeling maps the input onto the form") {
  std::mt19937_64 rng(3);
  for (const auto& t : fixtures::corpus()) {
    const auto r = fixtures::random_relabel(t, rng);
    const auto lab = canonical_labeling(r);
    std::vector<Facet> mapped;
    for (const auto& f : r.facets()) {
      mapped.push_back(sorted(Facet{lab.to_canonical(r, f[0]), lab.to_canonical(r, f[1]), lab.to_canonical(r, f[2]),
                                    lab.to_canonical(r, f[3])}));
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == lab.form.facets);
    for (Vertex c = 1; c <= r.n(); ++c) CHECK(lab.to_canonical(r, lab.to_original(c)) == c);
  }
}

TEST_CASE("property: invariance and brute-force agreement") {
  std::mt19937_64 rng(11);
  for (const auto& t : fixtures::corpus()) {
    const auto cf = canonical_form(t);
    CHECK(cf.n() == t.n());
    CHECK(to_triangulation(cf).f_vector() == t.f_vector());
    for (int i = 0; i < 20; ++i) CHECK(canonical_form(fixtures::random_relabel(t, rng)) == cf);
    if (t.n() <= 8) CHECK(cf.facets == oracle::brute_canonical(fixtures::as_list(t)));
  }
}
