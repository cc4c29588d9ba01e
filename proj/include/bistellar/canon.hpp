#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bistellar/triangulation.hpp"

namespace bistellar {

// Relabeling-invariant key of an isomorphism class: the lexicographically
// smallest sorted facet list over all relabelings onto 1..n, plus a stable
// 64-bit digest of it. Equality and ordering look at the facets only.
struct CanonicalForm {
  std::vector<Facet> facets;
  std::uint64_t hash = 0;

  std::size_t n() const noexcept;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) noexcept {
    return a.hash == b.hash && a.facets == b.facets;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) noexcept {
    return a.facets <=> b.facets;
  }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept {
    return static_cast<std::size_t>(c.hash);
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> original;   // original[i] = label mapped to canonical label i + 1
  std::vector<Vertex> canonical;  // canonical[i] = canonical label of t.vertices()[i]

  // Canonical label of an original vertex.
  Vertex to_canonical(const Triangulation& t, Vertex v) const;
  Vertex to_original(Vertex canonical_label) const { return original.at(canonical_label - 1); }
};

// FNV-1a over each label as 4 little-endian bytes, facet by facet.
std::uint64_t facet_digest(std::span<const Facet> facets) noexcept;

// Branch-and-bound over labelings: label k+1 always goes to an unlabeled
// vertex of a facet whose partially labeled key is currently minimal, and a
// branch is cut once its lower-bound facet list is no better than the best
// complete labeling found so far.
CanonicalLabeling canonical_labeling(const Triangulation& t);
CanonicalForm canonical_form(const Triangulation& t);

bool are_isomorphic(const Triangulation& a, const Triangulation& b);

Triangulation to_triangulation(const CanonicalForm& form);

// Canonical facet file: relabeled facets, sorted, LF endings, no comments.
void write_canonical(std::ostream& out, const Triangulation& t);

}  // namespace bistellar
