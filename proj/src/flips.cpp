#include "bistellar/flips.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "bistellar/error.hpp"

namespace bistellar {
namespace {

std::string site_text(const FlipMove& m) {
  std::string s;
  for (Vertex v : m.site()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

[[noreturn]] void illegal(const FlipMove& m, const std::string& why) {
  throw Error(ErrorKind::IllegalMove, format_move(m) + ": " + why);
}

// The vertex of `f` not in `t`.
Vertex apex(const Facet& f, const Triangle& t) noexcept {
  for (Vertex v : f) {
    if (v != t[0] && v != t[1] && v != t[2]) return v;
  }
  return 0;
}

struct ThreeTwoShape {
  bool bipyramid = false;
  Triangle opposite{};
};

// Valence-3 edge {a,b}: its three facets are {a,b,x,y},{a,b,y,z},{a,b,x,z}.
ThreeTwoShape three_two_shape(const Triangulation& t, Edge e) {
  ThreeTwoShape shape;
  if (t.edge_valence(e) != 3) return shape;
  std::vector<Vertex> others;
  for (const auto& f : t.edge_star(e).incident) {
    for (Vertex v : f) {
      if (v != e[0] && v != e[1]) others.push_back(v);
    }
  }
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());
  if (others.size() != 3) return shape;
  shape.bipyramid = true;
  shape.opposite = {others[0], others[1], others[2]};
  return shape;
}

std::vector<Facet> without(const std::vector<Facet>& facets, std::span<const Facet> removed) {
  std::vector<Facet> out;
  out.reserve(facets.size() + 3);
  for (const auto& f : facets) {
    if (std::find(removed.begin(), removed.end(), f) == removed.end()) out.push_back(f);
  }
  return out;
}

}  // namespace

std::size_t site_arity(FlipKind kind) noexcept {
  switch (kind) {
    case FlipKind::OneFour: return 4;
    case FlipKind::TwoThree: return 3;
    case FlipKind::ThreeTwo: return 2;
    case FlipKind::FourOne: return 1;
  }
  return 0;
}

std::string_view kind_code(FlipKind kind) noexcept {
  switch (kind) {
    case FlipKind::OneFour: return "14";
    case FlipKind::TwoThree: return "23";
    case FlipKind::ThreeTwo: return "32";
    case FlipKind::FourOne: return "41";
  }
  return "??";
}

FlipKind inverse_kind(FlipKind kind) noexcept {
  switch (kind) {
    case FlipKind::OneFour: return FlipKind::FourOne;
    case FlipKind::TwoThree: return FlipKind::ThreeTwo;
    case FlipKind::ThreeTwo: return FlipKind::TwoThree;
    case FlipKind::FourOne: return FlipKind::OneFour;
  }
  return kind;
}

FlipMove FlipMove::one_four(Facet site, Vertex new_vertex) {
  return FlipMove(FlipKind::OneFour, sorted(site), new_vertex);
}

FlipMove FlipMove::two_three(Triangle site) {
  auto s = sorted(site);
  return FlipMove(FlipKind::TwoThree, {s[0], s[1], s[2], 0}, 0);
}

FlipMove FlipMove::three_two(Edge site) {
  auto s = sorted(site);
  return FlipMove(FlipKind::ThreeTwo, {s[0], s[1], 0, 0}, 0);
}

FlipMove FlipMove::four_one(Vertex site) { return FlipMove(FlipKind::FourOne, {site, 0, 0, 0}, 0); }

FlipDelta flip_delta(FlipKind kind) noexcept {
  switch (kind) {
    case FlipKind::OneFour: return {1, 4, 6, 3};
    case FlipKind::TwoThree: return {0, 1, 2, 1};
    case FlipKind::ThreeTwo: return {0, -1, -2, -1};
    case FlipKind::FourOne: return {-1, -4, -6, -3};
  }
  return {0, 0, 0, 0};
}

bool legal_23(const Triangulation& t, Triangle triangle) {
  triangle = sorted(triangle);
  auto [f, g] = t.triangle_facets(triangle);
  return !t.has_edge({apex(f, triangle), apex(g, triangle)});
}

bool legal_32(const Triangulation& t, Edge edge) {
  auto shape = three_two_shape(t, sorted(edge));
  return shape.bipyramid && !t.has_triangle(shape.opposite);
}

bool legal_41(const Triangulation& t, Vertex v) {
  if (t.facet_indices_of(v).size() != 4) return false;
  auto nb = t.neighbors(v);
  return nb.size() == 4 && !t.has_facet({nb[0], nb[1], nb[2], nb[3]});
}

bool is_legal(const Triangulation& t, const FlipMove& move) {
  switch (move.kind()) {
    case FlipKind::OneFour:
      return t.has_facet(move.facet_site()) && move.new_vertex() >= 1 &&
             move.new_vertex() <= kMaxLabel && !t.has_vertex(move.new_vertex());
    case FlipKind::TwoThree:
      return t.has_triangle(move.triangle_site()) && legal_23(t, move.triangle_site());
    case FlipKind::ThreeTwo:
      return t.has_edge(move.edge_site()) && legal_32(t, move.edge_site());
    case FlipKind::FourOne:
      return t.has_vertex(move.vertex_site()) && legal_41(t, move.vertex_site());
  }
  return false;
}

Triangulation apply(const Triangulation& t, const FlipMove& move) {
  switch (move.kind()) {
    case FlipKind::OneFour: {
      const Facet f = move.facet_site();
      const Vertex v = move.new_vertex();
      if (!t.has_facet(f)) illegal(move, "site is not a facet");
      if (v < 1 || v > kMaxLabel) illegal(move, "new vertex label out of range");
      if (t.has_vertex(v)) illegal(move, "new vertex " + std::to_string(v) + " already present");
      auto facets = without(t.facets(), std::span(&f, 1));
      facets.push_back({f[0], f[1], f[2], v});
      facets.push_back({f[0], f[1], f[3], v});
      facets.push_back({f[0], f[2], f[3], v});
      facets.push_back({f[1], f[2], f[3], v});
      return Triangulation::from_facets(std::move(facets));
    }
    case FlipKind::TwoThree: {
      const Triangle tri = move.triangle_site();
      if (!t.has_triangle(tri)) illegal(move, "site is not a triangle");
      auto [f, g] = t.triangle_facets(tri);
      const Vertex d = apex(f, tri);
      const Vertex e = apex(g, tri);
      if (t.has_edge({d, e})) {
        illegal(move, "apex edge {" + std::to_string(std::min(d, e)) + "," +
                          std::to_string(std::max(d, e)) + "} already present");
      }
      const std::array removed{f, g};
      auto facets = without(t.facets(), removed);
      facets.push_back({tri[0], tri[1], d, e});
      facets.push_back({tri[0], tri[2], d, e});
      facets.push_back({tri[1], tri[2], d, e});
      return Triangulation::from_facets(std::move(facets));
    }
    case FlipKind::ThreeTwo: {
      const Edge e = move.edge_site();
      if (!t.has_edge(e)) illegal(move, "site is not an edge");
      const auto valence = t.edge_valence(e);
      if (valence != 3) illegal(move, "edge valence " + std::to_string(valence) + " != 3");
      auto shape = three_two_shape(t, e);
      if (!shape.bipyramid) illegal(move, "edge star is not a bipyramid");
      const auto& o = shape.opposite;
      if (t.has_triangle(o)) {
        illegal(move, "opposite triangle {" + std::to_string(o[0]) + "," + std::to_string(o[1]) +
                          "," + std::to_string(o[2]) + "} already present");
      }
      auto star = t.edge_star(e).incident;
      auto facets = without(t.facets(), star);
      facets.push_back({e[0], o[0], o[1], o[2]});
      facets.push_back({e[1], o[0], o[1], o[2]});
      return Triangulation::from_facets(std::move(facets));
    }
    case FlipKind::FourOne: {
      const Vertex v = move.vertex_site();
      if (!t.has_vertex(v)) illegal(move, "vertex not present");
      const auto star = t.facet_indices_of(v);
      if (star.size() != 4) illegal(move, "vertex lies in " + std::to_string(star.size()) + " facets, not 4");
      auto nb = t.neighbors(v);
      if (nb.size() != 4) illegal(move, "vertex has " + std::to_string(nb.size()) + " neighbours, not 4");
      const Facet replacement{nb[0], nb[1], nb[2], nb[3]};
      if (t.has_facet(replacement)) illegal(move, "replacement facet already present");
      std::vector<Facet> removed;
      for (auto i : star) removed.push_back(t.facets()[i]);
      auto facets = without(t.facets(), removed);
      facets.push_back(replacement);
      return Triangulation::from_facets(std::move(facets));
    }
  }
  illegal(move, "unknown kind");
}

std::vector<FlipMove> enumerate_moves(const Triangulation& t, std::span<const FlipKind> kinds) {
  auto wanted = [&](FlipKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  std::vector<FlipMove> moves;
  if (wanted(FlipKind::OneFour)) {
    const Vertex fresh = t.max_label() + 1;
    for (const auto& f : t.facets()) moves.push_back(FlipMove::one_four(f, fresh));
  }
  if (wanted(FlipKind::TwoThree)) {
    for (const auto& tri : t.triangles()) {
      if (legal_23(t, tri)) moves.push_back(FlipMove::two_three(tri));
    }
  }
  if (wanted(FlipKind::ThreeTwo)) {
    for (const auto& e : t.edges()) {
      if (legal_32(t, e)) moves.push_back(FlipMove::three_two(e));
    }
  }
  if (wanted(FlipKind::FourOne)) {
    for (Vertex v : t.vertices()) {
      if (legal_41(t, v)) moves.push_back(FlipMove::four_one(v));
    }
  }
  return moves;
}

FlipMove inverse_of(const FlipMove& move, const Triangulation& before) {
  switch (move.kind()) {
    case FlipKind::OneFour: return FlipMove::four_one(move.new_vertex());
    case FlipKind::TwoThree: {
      auto tri = move.triangle_site();
      auto [f, g] = before.triangle_facets(tri);
      return FlipMove::three_two({apex(f, tri), apex(g, tri)});
    }
    case FlipKind::ThreeTwo: {
      auto shape = three_two_shape(before, move.edge_site());
      if (!shape.bipyramid) illegal(move, "edge star is not a bipyramid");
      return FlipMove::two_three(shape.opposite);
    }
    case FlipKind::FourOne: {
      auto nb = before.neighbors(move.vertex_site());
      if (nb.size() != 4) illegal(move, "vertex does not have 4 neighbours");
      return FlipMove::one_four({nb[0], nb[1], nb[2], nb[3]}, move.vertex_site());
    }
  }
  illegal(move, "unknown kind");
}

FlipMove inverse(const FlipMove& move, const Triangulation& before, const Triangulation& after) {
  bool matches = false;
  try {
    matches = apply(before, move) == after;
  } catch (const Error&) {
    matches = false;
  }
  if (!matches) {
    throw Error(ErrorKind::NotInvertiblePair,
                format_move(move) + " does not carry the given triangulation to the other");
  }
  return inverse_of(move, before);
}

std::string format_move(const FlipMove& move) {
  std::string s(kind_code(move.kind()));
  s += ' ';
  s += site_text(move);
  if (move.kind() == FlipKind::OneFour) s += " -> " + std::to_string(move.new_vertex());
  return s;
}

FlipMove parse_move(const std::string& line) {
  auto fail = [&]() -> FlipMove { throw Error(ErrorKind::ParseError, "bad move '" + line + "'"); };
  std::istringstream in(line);
  std::string code;
  if (!(in >> code)) fail();
  std::vector<std::int64_t> values;
  std::string tok;
  bool arrow = false;
  std::int64_t target = 0;
  while (in >> tok) {
    if (tok == "->") {
      if (arrow || !(in >> target)) fail();
      arrow = true;
      continue;
    }
    if (arrow) fail();
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(tok, &used));
      if (used != tok.size()) fail();
    } catch (const std::logic_error&) {
      fail();
    }
  }
  for (auto v : values) {
    if (v < 1 || v > static_cast<std::int64_t>(kMaxLabel)) fail();
  }
  auto at = [&](std::size_t i) { return static_cast<Vertex>(values[i]); };
  if (code == "14" && values.size() == 4 && arrow && target >= 1 &&
      target <= static_cast<std::int64_t>(kMaxLabel)) {
    return FlipMove::one_four({at(0), at(1), at(2), at(3)}, static_cast<Vertex>(target));
  }
  if (arrow) fail();
  if (code == "23" && values.size() == 3) return FlipMove::two_three({at(0), at(1), at(2)});
  if (code == "32" && values.size() == 2) return FlipMove::three_two({at(0), at(1)});
  if (code == "41" && values.size() == 1) return FlipMove::four_one(at(0));
  return fail();
}

std::vector<FlipMove> read_trace(std::istream& in) {
  std::vector<FlipMove> moves;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    moves.push_back(parse_move(line));
  }
  return moves;
}

void write_trace(std::ostream& out, std::span<const FlipMove> moves) {
  for (const auto& m : moves) out << format_move(m) << '\n';
}

std::vector<FlipKind> parse_kinds(const std::string& text) {
  if (text == "all") return {kAllKinds.begin(), kAllKinds.end()};
  std::vector<FlipKind> kinds;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    bool found = false;
    for (auto k : kAllKinds) {
      if (tok == kind_code(k)) {
        if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) kinds.push_back(k);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::ParseError, "unknown flip kind '" + tok + "'");
  }
  std::sort(kinds.begin(), kinds.end());
  return kinds;
}

Triangulation replay(const Triangulation& start, std::span<const FlipMove> moves) {
  Triangulation t = start;
  for (const auto& m : moves) t = apply(t, m);
  return t;
}

}  // namespace bistellar
