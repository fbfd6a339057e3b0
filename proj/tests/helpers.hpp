#pragma once

#include <random>
#include <vector>

#include "skmono/mat2.hpp"
#include "skmono/words.hpp"

namespace skmono::testing {

inline IntMat2 random_sl2(std::mt19937_64& rng, int max_len = 40) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 2);
  IntMat2 a = kId;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    switch (pick(rng)) {
      case 0: a = a * kS; break;
      case 1: a = a * kT; break;
      default: a = a * kTinv; break;
    }
  }
  return a;
}

/// All X in SL2(Z) with |entries| <= bound. Small bounds only.
inline std::vector<IntMat2> bounded_sl2(int bound) {
  std::vector<IntMat2> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d)
          if (a * d - b * c == 1) out.push_back({a, b, c, d});
  return out;
}

}  // namespace skmono::testing
