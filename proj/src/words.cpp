#include "skmono/words.hpp"

namespace skmono {

namespace {

void emit_t_run(std::vector<Letter>& out, const Int& exponent) {
  Letter letter = exponent > 0 ? Letter::T : Letter::Tinv;
  Int count = abs(exponent);
  for (Int i = 0; i < count; ++i) out.push_back(letter);
}

}  // namespace

STWord st_word(const IntMat2& m) {
  if (!is_unimodular(m)) throw NotUnimodular("st_word: det != 1");
  STWord word;
  IntMat2 r = m;  // invariant: m == evaluate(emitted) * r
  while (r.c != 0) {
    Int q = floor_div(r.a, r.c);
    emit_t_run(word.letters, q);
    r = t_power(-q) * r;
    word.letters.push_back(Letter::S);
    // S^-1 * r
    r = IntMat2{r.c, r.d, -r.a, -r.b};
  }
  if (r.a == 1) {
    emit_t_run(word.letters, r.b);
    word.sign = 1;
  } else {
    emit_t_run(word.letters, -r.b);
    word.sign = -1;
  }
  return word;
}

IntMat2 evaluate(const STWord& w) {
  IntMat2 r = kId;
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::S: r = r * kS; break;
      case Letter::T: r = r * kT; break;
      case Letter::Tinv: r = r * kTinv; break;
    }
  }
  return w.sign < 0 ? -r : r;
}

int abelianization_mod6(const STWord& w) {
  int v = 0;
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::S: v += 3; break;
      case Letter::T: v += 1; break;
      case Letter::Tinv: v += 5; break;
    }
    v %= 6;
  }
  return v;
}

}  // namespace skmono
