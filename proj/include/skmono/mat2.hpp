#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "skmono/errors.hpp"

namespace skmono {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// 2x2 matrix over an exact scalar, row-major [[a,b],[c,d]].
///
/// Values are immutable in spirit: every operation returns a fresh matrix,
/// nothing here mutates in place.
template <class T>
struct Mat2 {
  T a{}, b{}, c{}, d{};

  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend Mat2 operator*(const T& k, const Mat2& x) {
    return {k * x.a, k * x.b, k * x.c, k * x.d};
  }

  // lexicographic; used for canonical orderings and dedup sets
  friend bool operator<(const Mat2& x, const Mat2& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  }
};

using IntMat2 = Mat2<Int>;
using RatMat2 = Mat2<Rat>;

template <class T>
Mat2<T> identity2() {
  return {T(1), T(0), T(0), T(1)};
}

inline const IntMat2 kId{1, 0, 0, 1};
inline const IntMat2 kS{0, -1, 1, 0};
inline const IntMat2 kT{1, 1, 0, 1};
inline const IntMat2 kTinv{1, -1, 0, 1};

template <class T>
T det(const Mat2<T>& m) {
  return m.a * m.d - m.b * m.c;
}

template <class T>
T trace(const Mat2<T>& m) {
  return m.a + m.d;
}

/// adj(M) with M*adj(M) = det(M)*I, exactly.
template <class T>
Mat2<T> adjugate(const Mat2<T>& m) {
  return {m.d, -m.b, -m.c, m.a};
}

template <class T>
bool is_unimodular(const Mat2<T>& m) {
  return det(m) == 1;
}

/// Inverse of a det-1 matrix (= adjugate). Throws on det != 1.
inline IntMat2 sl2_inverse(const IntMat2& m) {
  if (!is_unimodular(m)) throw NotUnimodular("sl2_inverse: det != 1");
  return adjugate(m);
}

/// gcd of the absolute entries; >= 1 for nonzero matrices, 0 for the zero matrix.
Int content(const IntMat2& m);

/// T^k power, k may be negative.
IntMat2 t_power(const Int& k);

/// Flip sign so the first nonzero of (a,b,c,d) is positive; identity on 0.
IntMat2 normalize_sign(const IntMat2& m);

/// Euclidean floor division helpers for cpp_int (which truncates toward zero).
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

/// Parse the matrix literal "a,b;c,d" (row-major, ';' between rows).
IntMat2 parse_intmat2(const std::string& text);
std::string format_intmat2(const IntMat2& m);

RatMat2 to_rational(const IntMat2& m);

}  // namespace skmono
