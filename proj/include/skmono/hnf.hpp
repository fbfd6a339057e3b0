#pragma once

#include <array>
#include <vector>

#include "skmono/mat2.hpp"

namespace skmono {

struct HnfResult {
  IntMat2 h;  // [[alpha,beta],[0,delta]], alpha,delta > 0, 0 <= beta < alpha
  IntMat2 u;  // det 1, b * u == h
};

/// Canonical representative of the right coset B*SL2(Z) for det(B) > 0.
/// Upper triangular with positive diagonal and the off-diagonal entry
/// reduced modulo the top-left pivot (the right action shifts beta by
/// multiples of alpha, so that is the range giving uniqueness).
/// Throws NonPositiveDeterminant.
HnfResult column_hnf(const IntMat2& b);

/// All normal forms of determinant m, ordered (alpha, beta) ascending.
/// There are sigma(m) of them.
std::vector<IntMat2> hnf_representatives(const Int& m);

/// The content-1 normal forms of determinant m; psi(m) = m*prod(1+1/p) many.
std::vector<IntMat2> primitive_hnf_representatives(const Int& m);

/// A sublattice of Z^4 kept as a row-style Hermite basis (pivots positive,
/// entries above each pivot reduced). Rows are flattened 2x2 matrices
/// (a,b,c,d).
class Lattice4 {
 public:
  using Vec = std::array<Int, 4>;

  /// Adds a vector; returns true if the lattice grew.
  bool insert(const Vec& v);
  bool insert(const IntMat2& m) { return insert(Vec{m.a, m.b, m.c, m.d}); }

  bool contains(const Vec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }

  friend bool operator==(const Lattice4&, const Lattice4&) = default;

 private:
  void renormalize();
  std::vector<Vec> rows_;  // sorted by pivot column
};

/// Largest elementary divisor of a full-rank sublattice of Z^4: the minimal
/// n with n*Z^4 contained in the lattice. Throws RankDeficient.
Int lattice_exponent(const Lattice4& lat);

/// Minimal n with n*M2 contained in the Z-span of the given matrices.
/// Throws RankDeficient when the span has rank < 4.
Int smith_exponent(const std::vector<IntMat2>& span);

}  // namespace skmono
