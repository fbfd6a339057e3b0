#pragma once

#include <string>

#include "skmono/hnf.hpp"
#include "skmono/mat2.hpp"

namespace skmono {

/// Exact coset representative P = B/sqrt(m) of SL2(R)/SL2(Z): B is a
/// primitive integer matrix in column Hermite form with det(B) = m > 0.
/// Two Conjugators are the same real coset iff the (B, m) pairs coincide.
/// (I, 1) is the identity coset.
struct Conjugator {
  IntMat2 b = kId;
  Int m = 1;

  friend bool operator==(const Conjugator&, const Conjugator&) = default;
};

/// Validates primitivity, det(b) == m and the Hermite form; throws
/// std::invalid_argument otherwise.
Conjugator make_conjugator(const IntMat2& b, const Int& m);

/// Coset of an arbitrary nonzero B with det > 0: divides out the content g
/// (scaling m by g^2 implicitly) and reduces to the Hermite representative.
Conjugator normalize_conjugator(const IntMat2& b);

/// Forward conjugation adj(B)*g*B / m = P^-1 g P. Throws
/// NotConjugateIntoIntegral when the result is not integral.
IntMat2 conjugate_through(const Conjugator& c, const IntMat2& g);

/// True iff adj(B)*g*B is divisible by m entrywise.
bool conjugates_integrally(const Conjugator& c, const IntMat2& g);

/// Pullback B*a*adj(B) / m = P a P^-1. Throws PullbackNotIntegral.
IntMat2 pullback(const Conjugator& c, const IntMat2& a);

/// True iff the pullback of a is integral; result written to out when so.
bool try_pullback(const Conjugator& c, const IntMat2& a, IntMat2& out);

std::string format_conjugator(const Conjugator& c);

}  // namespace skmono
