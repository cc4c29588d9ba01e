#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "bistellar/triangulation.hpp"

namespace bistellar {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

// Matrix of the boundary map from k-simplices (columns) to (k-1)-simplices
// (rows), k in 1..3. Simplices are ordered lexicographically with ascending
// vertices; the i-th face (vertex i dropped) carries sign (-1)^i.
IntegerMatrix boundary_matrix(const Triangulation& t, int k);

// Invariant factors d1 | d2 | ... followed by zeros; min(rows, cols) entries.
std::vector<mpz_class> smith_normal_form(IntegerMatrix m);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;  // each > 1, each dividing the next
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyProfile {
  std::array<HomologyGroup, 4> groups;

  std::array<std::size_t, 4> betti() const noexcept;
  bool torsion_free() const noexcept;
  // "H0=Z H1=0 H2=0 H3=Z"; torsion as "Z/2" summands joined with '+'.
  std::string to_string() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology_profile(const Triangulation& t);

// Integer homology of the 3-sphere. Necessary for sphericity, not sufficient.
bool is_sphere_candidate(const Triangulation& t);

}  // namespace bistellar
