#include "skmono/mat2.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>
#include <vector>

namespace skmono {

Int content(const IntMat2& m) {
  using boost::multiprecision::gcd;
  Int g = gcd(abs(m.a), abs(m.b));
  g = gcd(g, abs(m.c));
  g = gcd(g, abs(m.d));
  return g;
}

IntMat2 t_power(const Int& k) { return {1, k, 0, 1}; }

IntMat2 normalize_sign(const IntMat2& m) {
  for (const Int* e : {&m.a, &m.b, &m.c, &m.d}) {
    if (*e != 0) return *e < 0 ? -m : m;
  }
  return m;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

namespace {

Int parse_int_token(const std::string& tok) {
  std::string s;
  for (char ch : tok) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty matrix entry");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad matrix entry: " + tok);
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad matrix entry: " + tok);
  }
  return Int(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

IntMat2 parse_intmat2(const std::string& text) {
  auto rows = split(text, ';');
  if (rows.size() != 2) throw ParseError("matrix literal needs 2 rows: " + text);
  auto r0 = split(rows[0], ',');
  auto r1 = split(rows[1], ',');
  if (r0.size() != 2 || r1.size() != 2)
    throw ParseError("matrix literal needs 2 entries per row: " + text);
  return {parse_int_token(r0[0]), parse_int_token(r0[1]), parse_int_token(r1[0]),
          parse_int_token(r1[1])};
}

std::string format_intmat2(const IntMat2& m) {
  std::ostringstream os;
  os << m.a << ',' << m.b << ';' << m.c << ',' << m.d;
  return os.str();
}

RatMat2 to_rational(const IntMat2& m) {
  return {Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d)};
}

}  // namespace skmono
