#pragma once

#include <vector>

#include "skmono/conjugator.hpp"
#include "skmono/cosets.hpp"
#include "skmono/hnf.hpp"
#include "skmono/subgroup.hpp"

namespace skmono {

/// M(G): the Z-module of 2x2 integer matrices spanned by a finite-index
/// subgroup, with a Hermite basis and its exponent (the least n with
/// n*M2 inside the module).
struct SpanModule {
  std::array<IntMat2, 4> basis;
  Int exponent;
};

/// Closure of {I} + Schreier generators under left and right multiplication
/// by each generator, until the Hermite basis stabilizes. Inverses come for
/// free: g^-1 = tr(g)*I - g for det 1. Throws RankDeficient (cannot happen
/// for finite-index input).
SpanModule module_span(const SubgroupSpec& g, int cap = 10000);

/// All cosets P = B/sqrt(m) that can conjugate a group of module exponent n
/// into SL2(Z): primitive Hermite B with det(B) = m dividing n. Ordered by
/// m ascending, then (alpha, beta) ascending; (I,1) always first.
std::vector<Conjugator> candidate_conjugators(const Int& n);

/// True iff adj(B)*g*B = 0 mod m entrywise for every generator; conjugation
/// is a homomorphism so checking generators decides the whole group.
bool conjugation_integral(const Conjugator& c, const std::vector<IntMat2>& gens);

struct NgResult {
  int index = 0;
  Int exponent = 1;
  int count = 0;
  std::vector<Conjugator> witnesses;  // in enumeration order; (I,1) first
};

/// N(G) = #{P in SL2(R)/SL2(Z) : P^-1 G P inside SL2(Z)}.
NgResult compute_ng(const SubgroupSpec& g, int cap = 10000);

}  // namespace skmono
