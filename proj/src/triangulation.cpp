#include "bistellar/triangulation.hpp"

#include <algorithm>
#include <sstream>

#include "bistellar/error.hpp"

namespace bistellar {
namespace {

std::string describe(std::span<const Vertex> s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

std::array<Triangle, 4> facet_triangles(const Facet& f) noexcept {
  return {Triangle{f[0], f[1], f[2]}, Triangle{f[0], f[1], f[3]}, Triangle{f[0], f[2], f[3]},
          Triangle{f[1], f[2], f[3]}};
}

std::array<Edge, 6> facet_edges(const Facet& f) noexcept {
  return {Edge{f[0], f[1]}, Edge{f[0], f[2]}, Edge{f[0], f[3]},
          Edge{f[1], f[2]}, Edge{f[1], f[3]}, Edge{f[2], f[3]}};
}

}  // namespace

Edge edge_of(std::uint64_t key) noexcept {
  return {static_cast<Vertex>(key >> 21), static_cast<Vertex>(key & kMaxLabel)};
}

Triangle triangle_of(std::uint64_t key) noexcept {
  return {static_cast<Vertex>(key >> 42), static_cast<Vertex>((key >> 21) & kMaxLabel),
          static_cast<Vertex>(key & kMaxLabel)};
}

Triangulation Triangulation::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                       Relabel relabel) {
  std::vector<Facet> facets;
  facets.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != 4) {
      throw Error(ErrorKind::BadFacetArity,
                  "facet with " + std::to_string(row.size()) + " vertices (expected 4)");
    }
    Facet f{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (row[i] < 1 || row[i] > static_cast<std::int64_t>(kMaxLabel)) {
        throw Error(ErrorKind::LabelOutOfRange,
                    "vertex label " + std::to_string(row[i]) + " outside 1.." +
                        std::to_string(kMaxLabel));
      }
      f[i] = static_cast<Vertex>(row[i]);
    }
    facets.push_back(f);
  }
  return from_facets(std::move(facets), relabel);
}

Triangulation Triangulation::from_facets(std::vector<Facet> facets, Relabel relabel) {
  if (facets.empty()) throw Error(ErrorKind::EmptyInput, "no facets");
  for (auto& f : facets) {
    f = sorted(f);
    if (f[0] == f[1] || f[1] == f[2] || f[2] == f[3]) {
      throw Error(ErrorKind::BadFacetArity, "facet " + describe(f) + " repeats a vertex");
    }
    if (f[0] < 1 || f[3] > kMaxLabel) {
      throw Error(ErrorKind::LabelOutOfRange, "facet " + describe(f) + " has a label outside 1.." +
                                                  std::to_string(kMaxLabel));
    }
  }
  std::sort(facets.begin(), facets.end());
  if (auto dup = std::adjacent_find(facets.begin(), facets.end()); dup != facets.end()) {
    throw Error(ErrorKind::DuplicateFacet, "facet " + describe(*dup) + " listed twice");
  }

  if (relabel == Relabel::Contiguous) {
    std::vector<Vertex> labels;
    for (const auto& f : facets) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (auto& f : facets) {
      for (auto& x : f) {
        x = static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin() + 1);
      }
    }
    std::sort(facets.begin(), facets.end());
  }

  Triangulation t;
  t.facets_ = std::move(facets);
  t.build();
  return t;
}

void Triangulation::build() {
  for (const auto& f : facets_) vertices_.insert(vertices_.end(), f.begin(), f.end());
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  std::vector<std::pair<std::uint64_t, std::uint32_t>> tri;
  tri.reserve(facets_.size() * 4);
  std::vector<std::uint64_t> edge_keys;
  edge_keys.reserve(facets_.size() * 6);
  vertex_facets_.assign(vertices_.size(), {});
  for (std::uint32_t i = 0; i < facets_.size(); ++i) {
    for (const auto& t : facet_triangles(facets_[i])) tri.emplace_back(simplex_key(t), i);
    for (const auto& e : facet_edges(facets_[i])) edge_keys.push_back(simplex_key(e));
    for (Vertex v : facets_[i]) vertex_facets_[*vertex_index(v)].push_back(i);
  }

  std::sort(tri.begin(), tri.end());
  triangles_.reserve(tri.size() / 2);
  for (std::size_t i = 0; i < tri.size();) {
    std::size_t j = i;
    while (j < tri.size() && tri[j].first == tri[i].first) ++j;
    if (j - i != 2) {
      auto t = triangle_of(tri[i].first);
      throw Error(ErrorKind::NonPseudomanifold, "triangle " + describe(t) + " lies in " +
                                                    std::to_string(j - i) + " facets");
    }
    triangles_.push_back({tri[i].first, tri[i].second, tri[i + 1].second});
    i = j;
  }

  std::sort(edge_keys.begin(), edge_keys.end());
  for (std::size_t i = 0; i < edge_keys.size();) {
    std::size_t j = i;
    while (j < edge_keys.size() && edge_keys[j] == edge_keys[i]) ++j;
    edges_.emplace_back(edge_keys[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }

  if (auto fv = f_vector(); fv.euler_characteristic() != 0) {
    throw Error(ErrorKind::EulerViolation,
                "V-E+F-T = " + std::to_string(fv.euler_characteristic()) + " (expected 0)");
  }
}

std::optional<std::size_t> Triangulation::vertex_index(Vertex v) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

const Triangulation::TriangleEntry* Triangulation::find_triangle(Triangle t) const noexcept {
  const auto key = simplex_key(sorted(t));
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), key,
                             [](const TriangleEntry& e, std::uint64_t k) { return e.key < k; });
  if (it == triangles_.end() || it->key != key) return nullptr;
  return &*it;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, valence] : edges_) out.push_back(edge_of(key));
  return out;
}

std::vector<Triangle> Triangulation::triangles() const {
  std::vector<Triangle> out;
  out.reserve(triangles_.size());
  for (const auto& e : triangles_) out.push_back(triangle_of(e.key));
  return out;
}

bool Triangulation::has_vertex(Vertex v) const noexcept { return vertex_index(v).has_value(); }

bool Triangulation::has_edge(Edge e) const noexcept {
  e = sorted(e);
  if (e[0] == e[1] || e[1] > kMaxLabel) return false;
  const auto key = simplex_key(e);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{key, std::uint32_t{0}});
  return it != edges_.end() && it->first == key;
}

bool Triangulation::has_triangle(Triangle t) const noexcept {
  t = sorted(t);
  if (t[0] == t[1] || t[1] == t[2] || t[2] > kMaxLabel) return false;
  return find_triangle(t) != nullptr;
}

bool Triangulation::has_facet(Facet f) const noexcept {
  return std::binary_search(facets_.begin(), facets_.end(), sorted(f));
}

FVector Triangulation::f_vector() const noexcept {
  return {static_cast<std::int64_t>(vertices_.size()), static_cast<std::int64_t>(edges_.size()),
          static_cast<std::int64_t>(triangles_.size()), static_cast<std::int64_t>(facets_.size())};
}

bool Triangulation::is_neighborly() const noexcept {
  const auto n = vertices_.size();
  return edges_.size() == n * (n - 1) / 2;
}

std::size_t Triangulation::edge_valence(Edge e) const {
  e = sorted(e);
  const auto key = simplex_key(e);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{key, std::uint32_t{0}});
  if (e[0] == e[1] || e[1] > kMaxLabel || it == edges_.end() || it->first != key) {
    throw Error(ErrorKind::EdgeNotPresent, "edge " + describe(e));
  }
  return it->second;
}

EdgeStar Triangulation::edge_star(Edge e) const {
  e = sorted(e);
  EdgeStar star{e, {}};
  star.incident.reserve(edge_valence(e));
  for (auto i : facet_indices_of(e[0])) {
    const auto& f = facets_[i];
    if (std::binary_search(f.begin(), f.end(), e[1])) star.incident.push_back(f);
  }
  return star;
}

std::pair<Facet, Facet> Triangulation::triangle_facets(Triangle t) const {
  const auto* entry = has_triangle(t) ? find_triangle(t) : nullptr;
  if (!entry) throw Error(ErrorKind::TriangleNotPresent, "triangle " + describe(sorted(t)));
  return {facets_[entry->first], facets_[entry->second]};
}

std::span<const std::uint32_t> Triangulation::facet_indices_of(Vertex v) const {
  auto idx = vertex_index(v);
  if (!idx) throw Error(ErrorKind::VertexNotPresent, "vertex " + std::to_string(v));
  return vertex_facets_[*idx];
}

VertexLink Triangulation::link_of_vertex(Vertex v) const {
  VertexLink out{v, {}};
  for (auto i : facet_indices_of(v)) {
    Triangle t{};
    std::size_t k = 0;
    for (Vertex x : facets_[i]) {
      if (x != v) t[k++] = x;
    }
    out.link.push_back(t);
  }
  std::sort(out.link.begin(), out.link.end());
  return out;
}

std::vector<Vertex> Triangulation::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto i : facet_indices_of(v)) {
    for (Vertex x : facets_[i]) {
      if (x != v) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Triangulation::degree(Vertex v) const { return neighbors(v).size(); }

Triangulation Triangulation::normalized() const {
  return from_facets(facets_, Relabel::Contiguous);
}

}  // namespace bistellar
