#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bistellar {

using Vertex = std::uint32_t;
using Edge = std::array<Vertex, 2>;
using Triangle = std::array<Vertex, 3>;
using Facet = std::array<Vertex, 4>;

// Labels are packed 21 bits apiece into 64-bit simplex keys.
inline constexpr Vertex kMaxLabel = (Vertex{1} << 21) - 1;

struct FVector {
  std::int64_t v = 0;
  std::int64_t e = 0;
  std::int64_t f = 0;
  std::int64_t t = 0;

  std::int64_t euler_characteristic() const noexcept { return v - e + f - t; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

struct VertexLink {
  Vertex vertex = 0;
  std::vector<Triangle> link;  // sorted
};

struct EdgeStar {
  Edge edge{};
  std::vector<Facet> incident;  // sorted
};

enum class Relabel { Preserve, Contiguous };

template <std::size_t N>
std::array<Vertex, N> sorted(std::array<Vertex, N> s) noexcept {
  // tiny insertion sort; N <= 4
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) std::swap(s[j - 1], s[j]);
  return s;
}

inline std::uint64_t simplex_key(Edge e) noexcept {
  return (std::uint64_t{e[0]} << 21) | e[1];
}
inline std::uint64_t simplex_key(Triangle t) noexcept {
  return (std::uint64_t{t[0]} << 42) | (std::uint64_t{t[1]} << 21) | t[2];
}

// Closed combinatorial 3-pseudomanifold with Euler characteristic zero, stored
// as a sorted list of sorted facets. Skeleta and incidences are derived once at
// construction; the value is immutable afterwards.
class Triangulation {
 public:
  // Validates and normalizes. Throws Error on EmptyInput, BadFacetArity,
  // DuplicateFacet, NonPseudomanifold, EulerViolation, LabelOutOfRange.
  static Triangulation from_facets(std::vector<Facet> facets, Relabel relabel = Relabel::Preserve);

  // As above, but accepts rows of arbitrary arity (as read from a file).
  static Triangulation from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                 Relabel relabel = Relabel::Preserve);

  std::size_t n() const noexcept { return vertices_.size(); }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Vertex max_label() const noexcept { return vertices_.back(); }

  std::vector<Edge> edges() const;
  std::vector<Triangle> triangles() const;

  bool has_vertex(Vertex v) const noexcept;
  bool has_edge(Edge e) const noexcept;
  bool has_triangle(Triangle t) const noexcept;
  bool has_facet(Facet f) const noexcept;

  FVector f_vector() const noexcept;
  bool is_neighborly() const noexcept;

  // Throws EdgeNotPresent.
  std::size_t edge_valence(Edge e) const;
  EdgeStar edge_star(Edge e) const;

  // The two facets on either side of a triangle. Throws TriangleNotPresent.
  std::pair<Facet, Facet> triangle_facets(Triangle t) const;

  // Throws VertexNotPresent.
  VertexLink link_of_vertex(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::span<const std::uint32_t> facet_indices_of(Vertex v) const;

  // Relabels vertices to 1..n preserving their relative order.
  Triangulation normalized() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) noexcept {
    return a.facets_ == b.facets_;
  }

 private:
  struct TriangleEntry {
    std::uint64_t key;
    std::uint32_t first;
    std::uint32_t second;
  };

  Triangulation() = default;
  void build();
  std::optional<std::size_t> vertex_index(Vertex v) const noexcept;
  const TriangleEntry* find_triangle(Triangle t) const noexcept;

  std::vector<Facet> facets_;
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> edges_;  // key, valence
  std::vector<TriangleEntry> triangles_;
  std::vector<std::vector<std::uint32_t>> vertex_facets_;  // parallel to vertices_
};

Edge edge_of(std::uint64_t key) noexcept;
Triangle triangle_of(std::uint64_t key) noexcept;

}  // namespace bistellar
