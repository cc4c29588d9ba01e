#include "bistellar/homology.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace bistellar {
namespace {

template <typename Simplex>
std::size_t position(const std::vector<Simplex>& sorted_list, const Simplex& s) {
  return static_cast<std::size_t>(std::lower_bound(sorted_list.begin(), sorted_list.end(), s) -
                                  sorted_list.begin());
}

template <std::size_t N>
std::array<Vertex, N - 1> drop(const std::array<Vertex, N>& s, std::size_t i) {
  std::array<Vertex, N - 1> out{};
  for (std::size_t j = 0, k = 0; j < N; ++j) {
    if (j != i) out[k++] = s[j];
  }
  return out;
}

template <std::size_t N>
IntegerMatrix boundary_of(const std::vector<std::array<Vertex, N>>& cols,
                          const std::vector<std::array<Vertex, N - 1>>& rows) {
  IntegerMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t i = 0; i < N; ++i) m(position(rows, drop(cols[c], i)), c) = (i % 2 == 0) ? 1 : -1;
  }
  return m;
}

std::size_t rank_of(const std::vector<mpz_class>& diagonal) {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const mpz_class& d) { return d != 0; }));
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const mpz_class& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

IntegerMatrix boundary_matrix(const Triangulation& t, int k) {
  switch (k) {
    case 1: {
      std::vector<std::array<Vertex, 1>> rows;
      for (Vertex v : t.vertices()) rows.push_back({v});
      return boundary_of(t.edges(), rows);
    }
    case 2: return boundary_of(t.triangles(), t.edges());
    case 3: return boundary_of(t.facets(), t.triangles());
    default: throw std::invalid_argument("boundary dimension must be 1, 2 or 3");
  }
}

std::vector<mpz_class> smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t limit = std::min(rows, cols);
  std::vector<mpz_class> diagonal;
  diagonal.reserve(limit);
  mpz_class q;

  // Pivot: smallest nonzero magnitude in the trailing block.
  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const auto& x = m(i, j);
        if (x == 0) continue;
        if (!best || mpz_cmpabs(x.get_mpz_t(), m(best->first, best->second).get_mpz_t()) < 0) {
          best = {i, j};
          if (x == 1 || x == -1) return best;
        }
      }
    }
    return best;
  };

  bool exhausted = false;
  for (std::size_t t = 0; t < limit && !exhausted; ++t) {
    for (;;) {
      const auto at = find_pivot(t);
      if (!at) {
        exhausted = true;
        break;
      }
      const auto [pr, pc] = *at;
      if (pr != t) {
        for (std::size_t j = t; j < cols; ++j) swap(m(pr, j), m(t, j));
      }
      if (pc != t) {
        for (std::size_t i = t; i < rows; ++i) swap(m(i, pc), m(i, t));
      }

      bool residue = false;
      const mpz_class pivot = m(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), pivot.get_mpz_t());
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) {
            if (m(t, j) != 0) m(i, j) -= q * m(t, j);
          }
        }
        residue |= (m(i, t) != 0);
      }
      if (residue) continue;
      // Column t is clear below the pivot, so column operations only touch row t.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        mpz_tdiv_r(m(t, j).get_mpz_t(), m(t, j).get_mpz_t(), pivot.get_mpz_t());
        residue |= (m(t, j) != 0);
      }
      if (residue) continue;
      diagonal.push_back(abs(pivot));
      break;
    }
  }

  diagonal.resize(limit, 0);
  // diag(a, b) is equivalent to diag(gcd, lcm); enforce the divisibility chain.
  const std::size_t r = rank_of(diagonal);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (diagonal[j] % diagonal[i] == 0) continue;
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  return diagonal;
}

std::array<std::size_t, 4> HomologyProfile::betti() const noexcept {
  return {groups[0].betti, groups[1].betti, groups[2].betti, groups[3].betti};
}

bool HomologyProfile::torsion_free() const noexcept {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.torsion.empty(); });
}

std::string HomologyProfile::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k) out << ' ';
    out << 'H' << k << '=';
    std::vector<std::string> parts;
    if (groups[k].betti == 1) parts.emplace_back("Z");
    if (groups[k].betti > 1) parts.push_back("Z^" + std::to_string(groups[k].betti));
    for (const auto& d : groups[k].torsion) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) parts.emplace_back("0");
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "+" : "") << parts[i];
  }
  return out.str();
}

HomologyProfile homology_profile(const Triangulation& t) {
  const auto fv = t.f_vector();
  const std::array<std::size_t, 4> chain_dims{static_cast<std::size_t>(fv.v), static_cast<std::size_t>(fv.e),
                                              static_cast<std::size_t>(fv.f), static_cast<std::size_t>(fv.t)};
  // snf[k] for boundary k = 1..3; rank of boundary 0 and 4 is zero.
  std::array<std::vector<mpz_class>, 5> snf;
  std::array<std::size_t, 5> rank{};
  for (int k = 1; k <= 3; ++k) {
    snf[k] = smith_normal_form(boundary_matrix(t, k));
    rank[k] = rank_of(snf[k]);
  }

  HomologyProfile p;
  for (std::size_t k = 0; k < 4; ++k) {
    p.groups[k].betti = chain_dims[k] - rank[k] - rank[k + 1];
    for (const auto& d : snf[k + 1]) {
      if (d > 1) p.groups[k].torsion.push_back(d);
    }
  }
  return p;
}

bool is_sphere_candidate(const Triangulation& t) {
  auto p = homology_profile(t);
  return p.betti() == std::array<std::size_t, 4>{1, 0, 0, 1} && p.torsion_free();
}

}  // namespace bistellar
