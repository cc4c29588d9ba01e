#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bistellar/triangulation.hpp"

namespace bistellar {

// Declaration order is the deterministic enumeration order.
enum class FlipKind : std::uint8_t { OneFour, TwoThree, ThreeTwo, FourOne };

inline constexpr std::array<FlipKind, 4> kAllKinds{FlipKind::OneFour, FlipKind::TwoThree,
                                                   FlipKind::ThreeTwo, FlipKind::FourOne};
inline constexpr std::array<FlipKind, 2> kVertexPreserving{FlipKind::TwoThree,
                                                           FlipKind::ThreeTwo};

// Site arity: 4, 3, 2, 1 vertices for OneFour, TwoThree, ThreeTwo, FourOne.
std::size_t site_arity(FlipKind kind) noexcept;
std::string_view kind_code(FlipKind kind) noexcept;  // "14", "23", "32", "41"
FlipKind inverse_kind(FlipKind kind) noexcept;

class FlipMove {
 public:
  static FlipMove one_four(Facet site, Vertex new_vertex);
  static FlipMove two_three(Triangle site);
  static FlipMove three_two(Edge site);
  static FlipMove four_one(Vertex site);

  FlipKind kind() const noexcept { return kind_; }
  // Sorted site vertices; size() == site_arity(kind()).
  std::span<const Vertex> site() const noexcept { return {site_.data(), site_arity(kind_)}; }
  Vertex new_vertex() const noexcept { return new_vertex_; }  // 0 unless OneFour

  Facet facet_site() const noexcept { return site_; }
  Triangle triangle_site() const noexcept { return {site_[0], site_[1], site_[2]}; }
  Edge edge_site() const noexcept { return {site_[0], site_[1]}; }
  Vertex vertex_site() const noexcept { return site_[0]; }

  friend auto operator<=>(const FlipMove&, const FlipMove&) = default;

 private:
  FlipMove(FlipKind kind, Facet site, Vertex new_vertex) noexcept
      : kind_(kind), site_(site), new_vertex_(new_vertex) {}

  FlipKind kind_;
  Facet site_;  // unused tail entries are zero
  Vertex new_vertex_;
};

struct FlipDelta {
  std::int64_t dv, de, df, dt;
  friend bool operator==(const FlipDelta&, const FlipDelta&) = default;
};

FlipDelta flip_delta(FlipKind kind) noexcept;

// Legality predicates. Each throws when its site is not a face of T.
bool legal_23(const Triangulation& t, Triangle triangle);  // TriangleNotPresent
bool legal_32(const Triangulation& t, Edge edge);          // EdgeNotPresent
bool legal_41(const Triangulation& t, Vertex v);           // VertexNotPresent
bool is_legal(const Triangulation& t, const FlipMove& move);

// Throws IllegalMove naming the failed condition.
Triangulation apply(const Triangulation& t, const FlipMove& move);

// All legal moves of the requested kinds, ordered by kind then site.
// OneFour moves use max_label() + 1 as the new vertex.
std::vector<FlipMove> enumerate_moves(const Triangulation& t, std::span<const FlipKind> kinds);

// The move undoing `move`. Throws NotInvertiblePair unless apply(before, move) == after.
FlipMove inverse(const FlipMove& move, const Triangulation& before, const Triangulation& after);

// Inverse computed from `before` alone, without re-applying the move.
FlipMove inverse_of(const FlipMove& move, const Triangulation& before);

// The move expressed after relabeling vertex x to map(x).
template <typename Map>
FlipMove relabel_move(const FlipMove& move, Map&& map) {
  auto s = move.facet_site();
  switch (move.kind()) {
    case FlipKind::OneFour:
      return FlipMove::one_four({map(s[0]), map(s[1]), map(s[2]), map(s[3])}, move.new_vertex());
    case FlipKind::TwoThree: return FlipMove::two_three({map(s[0]), map(s[1]), map(s[2])});
    case FlipKind::ThreeTwo: return FlipMove::three_two({map(s[0]), map(s[1])});
    case FlipKind::FourOne: return FlipMove::four_one(map(s[0]));
  }
  return move;
}

// Trace text: "23 1 2 3", "32 5 6", "14 1 2 3 4 -> 7", "41 7".
std::string format_move(const FlipMove& move);
FlipMove parse_move(const std::string& line);  // throws ParseError
std::vector<FlipMove> read_trace(std::istream& in);
void write_trace(std::ostream& out, std::span<const FlipMove> moves);

// Parses "23,32" / "14,23" style kind lists (also accepts "all").
std::vector<FlipKind> parse_kinds(const std::string& text);

Triangulation replay(const Triangulation& start, std::span<const FlipMove> moves);

}  // namespace bistellar
