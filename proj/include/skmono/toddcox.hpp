#pragma once

#include <array>
#include <vector>

#include "skmono/mat2.hpp"
#include "skmono/words.hpp"

namespace skmono {

/// Word over the presentation alphabet {s, s^-1, t, t^-1} = {0,1,2,3}.
using GroupWord = std::vector<int>;

inline int inverse_letter(int l) { return l ^ 1; }

/// Translate an S,T word. In SL2 mode a -1 sign becomes a trailing s^2
/// (S^2 = -I); projectively the sign is dropped.
GroupWord word_from_st(const STWord& w, bool projective);

/// Completed coset table of a finitely generated subgroup of PSL2(Z)
/// (presentation <s,t | s^2 = (st)^3 = 1>) or SL2(Z)
/// (<s,t | s^4 = 1, (st)^3 = s^2>).
struct ToddCoxeterTable {
  std::vector<std::array<int, 4>> rows;  // complete on live cosets
  bool projective = true;

  int index() const { return static_cast<int>(rows.size()); }
  int trace(int start, const GroupWord& w) const;
  bool contains(const IntMat2& m) const;  // trace the S,T word from coset 0
};

/// HLT-style enumeration with immediate coincidence processing and a hard
/// coset cap. Deterministic: definitions scan letters in the fixed order
/// s, s^-1, t, t^-1. Throws CapExceeded.
ToddCoxeterTable todd_coxeter(const std::vector<GroupWord>& subgroup_gens,
                              bool projective, int cap);

/// Index in PSL2(Z) of the subgroup generated by the given matrices,
/// by Todd-Coxeter over <s,t | s^2 = (st)^3 = 1>. Throws CapExceeded,
/// NotUnimodular.
int index_of_generated(const std::vector<IntMat2>& gens, int cap = 10000,
                       bool projective = true);

}  // namespace skmono
