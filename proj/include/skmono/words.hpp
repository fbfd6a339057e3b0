#pragma once

#include <cstdint>
#include <vector>

#include "skmono/mat2.hpp"

namespace skmono {

enum class Letter : std::uint8_t { S, T, Tinv };

/// A word in the standard generators S = [[0,-1],[1,0]], T = [[1,1],[0,1]],
/// together with a global sign recording a -I factor:
/// evaluate(word) * sign reproduces the source matrix exactly.
struct STWord {
  std::vector<Letter> letters;
  int sign = 1;  // +1 or -1

  std::size_t size() const { return letters.size(); }
};

/// Continued-fraction decomposition of a det-1 integer matrix.
/// Deterministic: the left column is reduced by floor division, top entry
/// pivot. Emitted T-runs never mix T with T^-1, so no cancellable pair
/// remains. Throws NotUnimodular.
STWord st_word(const IntMat2& m);

IntMat2 evaluate(const STWord& w);

/// Image under the abelianization PSL2(Z) -> Z/6 (S -> 3, T -> 1).
/// The sign flag is irrelevant projectively and is ignored.
int abelianization_mod6(const STWord& w);

}  // namespace skmono
