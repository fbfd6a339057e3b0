#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "skmono/errors.hpp"
#include "skmono/hnf.hpp"
#include "skmono/mat2.hpp"
#include "skmono/words.hpp"

using namespace skmono;
using skmono::testing::bounded_sl2;
using skmono::testing::random_sl2;

TEST_CASE("adjugate") {
  CHECK(adjugate(kId) == kId);
  CHECK(adjugate(IntMat2{2, 0, 0, 1}) == IntMat2{1, 0, 0, 2});
  CHECK(adjugate(IntMat2{5, 4, -4, -3}) == IntMat2{-3, -4, 4, 5});

  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    IntMat2 a = random_sl2(rng);
    CHECK(a * adjugate(a) == kId);
    CHECK(adjugate(a) * a == kId);
  }
  // non-unimodular case as well
  IntMat2 b{6, 4, 2, 8};
  CHECK(b * adjugate(b) == det(b) * kId);
}

TEST_CASE("content and parsing") {
  CHECK(content(IntMat2{2, 4, -6, 8}) == 2);
  CHECK(content(kS) == 1);
  CHECK(content(IntMat2{0, 0, 0, 0}) == 0);
  CHECK(parse_intmat2("1,4;0,1") == IntMat2{1, 4, 0, 1});
  CHECK(parse_intmat2(" -7 , 16 ; -4 , 9 ") == IntMat2{-7, 16, -4, 9});
  CHECK(format_intmat2(IntMat2{-7, 16, -4, 9}) == "-7,16;-4,9");
  CHECK_THROWS_AS(parse_intmat2("1,2;3"), ParseError);
  CHECK_THROWS_AS(parse_intmat2("a,2;3,4"), ParseError);
}

TEST_CASE("st_word examples") {
  STWord w = st_word(kId);
  CHECK(w.letters.empty());
  CHECK(w.sign == 1);

  w = st_word(IntMat2{1, 5, 0, 1});
  CHECK(w.sign == 1);
  CHECK(w.size() == 5);
  for (Letter l : w.letters) CHECK(l == Letter::T);

  w = st_word(kS);
  CHECK(w.sign == 1);
  REQUIRE(w.size() == 1);
  CHECK(w.letters[0] == Letter::S);

  CHECK_THROWS_AS(st_word(IntMat2{1, 0, 0, 2}), NotUnimodular);
}

TEST_CASE("st_word round-trips and stays reduced") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    IntMat2 a = random_sl2(rng, 40);
    STWord w = st_word(a);
    CHECK(evaluate(w) == a);
    for (std::size_t k = 1; k < w.letters.size(); ++k) {
      bool cancel = (w.letters[k - 1] == Letter::T && w.letters[k] == Letter::Tinv) ||
                    (w.letters[k - 1] == Letter::Tinv && w.letters[k] == Letter::T);
      CHECK_FALSE(cancel);
    }
  }
}

TEST_CASE("abelianization of the generators") {
  CHECK(abelianization_mod6(st_word(kS)) == 3);
  CHECK(abelianization_mod6(st_word(kT)) == 1);
  CHECK(abelianization_mod6(st_word(kTinv)) == 5);
  // homomorphism on random products
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    IntMat2 a = random_sl2(rng, 20), b = random_sl2(rng, 20);
    int va = abelianization_mod6(st_word(a));
    int vb = abelianization_mod6(st_word(b));
    CHECK(abelianization_mod6(st_word(a * b)) == (va + vb) % 6);
  }
}

TEST_CASE("column_hnf examples") {
  auto r = column_hnf(IntMat2{1, 0, 0, 2});
  CHECK(r.h == IntMat2{1, 0, 0, 2});
  CHECK(r.u == kId);

  r = column_hnf(IntMat2{0, -1, 2, 0});
  CHECK(r.h == IntMat2{1, 0, 0, 2});
  CHECK(det(r.u) == 1);
  CHECK(IntMat2{0, -1, 2, 0} * r.u == r.h);

  CHECK_THROWS_AS(column_hnf(IntMat2{1, 0, 0, -1}), NonPositiveDeterminant);
  CHECK_THROWS_AS(column_hnf(IntMat2{1, 1, 1, 1}), NonPositiveDeterminant);
}

TEST_CASE("column_hnf is canonical on right cosets") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-9, 9);
  int done = 0;
  while (done < 200) {
    IntMat2 b{entry(rng), entry(rng), entry(rng), entry(rng)};
    if (det(b) <= 0) continue;
    ++done;
    auto r = column_hnf(b);
    CHECK(b * r.u == r.h);
    CHECK(det(r.u) == 1);
    CHECK(r.h.c == 0);
    CHECK(r.h.a > 0);
    CHECK(r.h.d > 0);
    CHECK(r.h.b >= 0);
    CHECK(r.h.b < r.h.a);
    // idempotent and constant on the orbit
    CHECK(column_hnf(r.h).h == r.h);
    IntMat2 x = random_sl2(rng, 12);
    CHECK(column_hnf(b * x).h == r.h);
  }
}

TEST_CASE("hnf uniqueness by exhaustive small search") {
  // all normal forms reachable from [[0,-1],[2,0]] by bounded unimodular
  // right factors collapse to the single representative
  IntMat2 b{0, -1, 2, 0};
  std::set<IntMat2> normals;
  for (const IntMat2& x : bounded_sl2(6)) {
    IntMat2 c = b * x;
    if (c.c == 0 && c.a > 0 && c.d > 0 && c.b >= 0 && c.b < c.a)
      normals.insert(c);
  }
  REQUIRE(normals.size() == 1);
  CHECK(*normals.begin() == column_hnf(b).h);
}

TEST_CASE("hnf representative counts") {
  // sigma(m) in total, psi(m) primitive
  std::map<int, int> sigma = {{2, 3}, {3, 4}, {4, 7}, {8, 15}, {16, 31}};
  std::map<int, int> psi = {{2, 3}, {3, 4}, {4, 6}, {8, 12}, {16, 24}};
  for (auto [m, count] : sigma)
    CHECK(hnf_representatives(m).size() == static_cast<std::size_t>(count));
  for (auto [m, count] : psi)
    CHECK(primitive_hnf_representatives(m).size() ==
          static_cast<std::size_t>(count));
  CHECK(hnf_representatives(4).size() == 7);
}

TEST_CASE("smith exponent") {
  std::vector<IntMat2> unit = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                               {0, 0, 0, 1}};
  CHECK(smith_exponent(unit) == 1);

  std::vector<IntMat2> group = {kId, kS, kT, kS * kT};
  CHECK(smith_exponent(group) == 1);

  std::vector<IntMat2> scaled = {kId, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 4}};
  CHECK(smith_exponent(scaled) == 4);

  CHECK_THROWS_AS(smith_exponent({kId}), RankDeficient);
  CHECK_THROWS_AS(smith_exponent({kId, kT}), RankDeficient);
}

TEST_CASE("lattice membership") {
  Lattice4 lat;
  lat.insert(kId);
  lat.insert(IntMat2{0, 2, 0, 0});
  CHECK(lat.contains({1, 0, 0, 1}));
  CHECK(lat.contains({1, 2, 0, 1}));
  CHECK_FALSE(lat.contains({0, 1, 0, 0}));
  CHECK_FALSE(lat.contains({0, 0, 1, 0}));
}
