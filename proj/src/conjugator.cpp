#include "skmono/conjugator.hpp"

#include <sstream>
#include <stdexcept>

#include "skmono/errors.hpp"

namespace skmono {

Conjugator make_conjugator(const IntMat2& b, const Int& m) {
  if (m <= 0 || det(b) != m)
    throw std::invalid_argument("conjugator: det(B) must equal m > 0");
  if (content(b) != 1) throw std::invalid_argument("conjugator: B not primitive");
  if (b.c != 0 || b.a <= 0 || b.d <= 0 || b.b < 0 || b.b >= b.a)
    throw std::invalid_argument("conjugator: B not in Hermite form");
  return Conjugator{b, m};
}

Conjugator normalize_conjugator(const IntMat2& b) {
  if (det(b) <= 0) throw NonPositiveDeterminant("conjugator: det(B) <= 0");
  Int g = content(b);
  IntMat2 prim{b.a / g, b.b / g, b.c / g, b.d / g};
  IntMat2 h = column_hnf(prim).h;
  return Conjugator{h, det(h)};
}

IntMat2 conjugate_through(const Conjugator& c, const IntMat2& g) {
  IntMat2 x = adjugate(c.b) * g * c.b;
  if (x.a % c.m != 0 || x.b % c.m != 0 || x.c % c.m != 0 || x.d % c.m != 0)
    throw NotConjugateIntoIntegral("conjugation leaves SL2(Z): " +
                                   format_intmat2(g));
  return {x.a / c.m, x.b / c.m, x.c / c.m, x.d / c.m};
}

bool conjugates_integrally(const Conjugator& c, const IntMat2& g) {
  IntMat2 x = adjugate(c.b) * g * c.b;
  return x.a % c.m == 0 && x.b % c.m == 0 && x.c % c.m == 0 && x.d % c.m == 0;
}

IntMat2 pullback(const Conjugator& c, const IntMat2& a) {
  IntMat2 out;
  if (!try_pullback(c, a, out))
    throw PullbackNotIntegral("pullback leaves SL2(Z): " + format_intmat2(a));
  return out;
}

bool try_pullback(const Conjugator& c, const IntMat2& a, IntMat2& out) {
  IntMat2 x = c.b * a * adjugate(c.b);
  if (x.a % c.m != 0 || x.b % c.m != 0 || x.c % c.m != 0 || x.d % c.m != 0)
    return false;
  out = {x.a / c.m, x.b / c.m, x.c / c.m, x.d / c.m};
  return true;
}

std::string format_conjugator(const Conjugator& c) {
  std::ostringstream os;
  os << "B=" << format_intmat2(c.b) << "; m=" << c.m;
  return os.str();
}

}  // namespace skmono
