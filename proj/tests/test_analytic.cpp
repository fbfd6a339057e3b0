#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "skmono/analytic.hpp"
#include "skmono/errors.hpp"
#include "skmono/fixtures.hpp"
#include "skmono/kodaira.hpp"

using namespace skmono;

namespace {

constexpr double kPi = std::numbers::pi;

LocalModel make(LocalModel::Kind kind, int n = 1) {
  LocalModel m;
  m.kind = kind;
  m.n = n;
  return m;
}

LocalModel type3(int p, int q) {
  LocalModel m;
  m.kind = LocalModel::Kind::Type3;
  m.beta_frac = {p, q};
  return m;
}

double matrix_error(const Eigen::Matrix2d& a, const IntMat2& expected) {
  double err = 0.0;
  err = std::max(err, std::abs(a(0, 0) - static_cast<double>(expected.a)));
  err = std::max(err, std::abs(a(0, 1) - static_cast<double>(expected.b)));
  err = std::max(err, std::abs(a(1, 0) - static_cast<double>(expected.c)));
  err = std::max(err, std::abs(a(1, 1) - static_cast<double>(expected.d)));
  return err;
}

IntMat2 round_matrix(const Eigen::Matrix2d& a) {
  return {Int(std::llround(a(0, 0))), Int(std::llround(a(0, 1))),
          Int(std::llround(a(1, 0))), Int(std::llround(a(1, 1)))};
}

}  // namespace

TEST_CASE("density closed forms") {
  LocalModel half = type3(1, 2);
  CHECK(density(half, Complex(0.1, 0.0)) ==
        doctest::Approx(5.0).epsilon(1e-12));
  CHECK(reference_density(half, Complex(0.1, 0.0)) ==
        doctest::Approx(5.0).epsilon(1e-12));

  LocalModel i1 = make(LocalModel::Kind::In, 1);
  double d1 = density(i1, Complex(0.1, 0.0));
  double want = -(1.0 / (8.0 * kPi)) * std::log(0.01);
  CHECK(std::abs(d1 - want) < 1e-12);
  CHECK(std::abs(d1 - reference_density(i1, Complex(0.1, 0.0))) < 1e-12);
}

TEST_CASE("density agrees with the reference forms everywhere") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> rad(0.02, 0.4);
  std::vector<LocalModel> models;
  for (const auto& row : fixtures::integral_model_rows()) models.push_back(row.model);
  for (auto [p, q] : fixtures::admissible_betas()) models.push_back(type3(p, q));
  {
    LocalModel ii = make(LocalModel::Kind::II);
    ii.f = {Complex(0.11, 0.05), Complex(-0.04, 0.02)};
    models.push_back(ii);
    LocalModel i2 = make(LocalModel::Kind::In, 2);
    i2.f = {Complex(0.3, -0.2)};
    models.push_back(i2);
    LocalModel t1 = make(LocalModel::Kind::Type1);
    t1.f = {Complex(0.1, 0.4)};
    models.push_back(t1);
    LocalModel is0 = make(LocalModel::Kind::Istar0);
    is0.g = {Complex(1.0, 0.1), Complex(0.05, 0.0)};
    is0.h = {Complex(-0.2, 1.1)};
    models.push_back(is0);
  }
  for (const LocalModel& m : models) {
    double dom = m.domain_radius();
    REQUIRE(dom > 0.0);
    for (int i = 0; i < 200; ++i) {
      Complex zeta = std::polar(rad(rng) * dom, ang(rng));
      double d = density(m, zeta);
      CHECK(d > 0.0);
      CHECK(std::abs(d - reference_density(m, zeta)) <= 1e-12 * (1.0 + d));
    }
  }
}

TEST_CASE("density domain and positivity guards") {
  LocalModel m = type3(1, 2);
  CHECK_THROWS_AS(density(m, Complex(0.0, 0.0)), OutsideDomain);
  CHECK_THROWS_AS(density(m, Complex(0.9, 0.0)), OutsideDomain);
  // an orientation-reversing pair change makes Im(tau) negative
  LocalModel bad = m;
  bad.pair_change << 0, 1, 1, 0;
  CHECK_THROWS_AS(density(bad, Complex(0.1, 0.0)), NonPositiveDensity);
  // g, h with the wrong orientation admit no valid disk
  LocalModel is0 = make(LocalModel::Kind::Istar0);
  is0.g = {Complex(1.0, 0.0)};
  is0.h = {Complex(0.0, -1.0)};
  CHECK(is0.domain_radius() == 0.0);
  CHECK_THROWS_AS(density(is0, Complex(0.1, 0.0)), NonPositiveDensity);
}

TEST_CASE("monodromy of the integral models") {
  for (const auto& row : fixtures::integral_model_rows()) {
    Eigen::Matrix2d a = continue_monodromy(row.model, 0.1, 4096);
    INFO(kind_name(row.model.kind));
    CHECK(matrix_error(a, row.monodromy) < 1e-6);
    CHECK(std::abs(a.determinant() - 1.0) < 1e-8);
    CHECK(classify(round_matrix(a)) == classify(row.monodromy));
  }
}

TEST_CASE("monodromy with analytic perturbations") {
  LocalModel ii = make(LocalModel::Kind::II);
  ii.f = {Complex(0.05, 0.02), Complex(-0.01, 0.0)};
  CHECK(matrix_error(continue_monodromy(ii, 0.1, 4096), {0, 1, -1, 1}) < 1e-6);

  LocalModel i2 = make(LocalModel::Kind::In, 2);
  i2.f = {Complex(0.5, 0.25)};
  CHECK(matrix_error(continue_monodromy(i2, 0.1, 4096), {1, 2, 0, 1}) < 1e-6);

  LocalModel is0 = make(LocalModel::Kind::Istar0);
  is0.g = {Complex(1.0, 0.0), Complex(0.1, 0.05)};
  is0.h = {Complex(0.0, 1.0), Complex(-0.07, 0.01)};
  CHECK(matrix_error(continue_monodromy(is0, 0.1, 4096), {-1, 0, 0, -1}) < 1e-6);

  // the raw disk models: I_{2 pi} and R_{2 pi beta}
  Eigen::Matrix2d t1 = continue_monodromy(make(LocalModel::Kind::Type1), 0.1, 4096);
  CHECK(std::abs(t1(0, 0) - 1.0) < 1e-9);
  CHECK(std::abs(t1(0, 1) - 2.0 * kPi) < 1e-9);
  CHECK(std::abs(t1(1, 0)) < 1e-9);

  Eigen::Matrix2d r = continue_monodromy(type3(1, 6), 0.1, 4096);
  double th = 2.0 * kPi / 6.0;
  CHECK(std::abs(r(0, 0) - std::cos(th)) < 1e-9);
  CHECK(std::abs(r(0, 1) + std::sin(th)) < 1e-9);
  CHECK(std::abs(r(1, 0) - std::sin(th)) < 1e-9);
}

TEST_CASE("monodromy error under step refinement") {
  // the accumulated-argument continuation is exact up to rounding, so both
  // step counts sit at the floor; halving may not reduce further
  LocalModel ii = make(LocalModel::Kind::II);
  double e1 = matrix_error(continue_monodromy(ii, 0.1, 2048), {0, 1, -1, 1});
  double e2 = matrix_error(continue_monodromy(ii, 0.1, 4096), {0, 1, -1, 1});
  CHECK(e1 < 1e-10);
  CHECK(e2 <= std::max(e1 / 2.0, 1e-10));
}

TEST_CASE("continuation guards") {
  LocalModel m = make(LocalModel::Kind::In, 1);
  CHECK_THROWS_AS(continue_monodromy(m, 0.1, 32), std::invalid_argument);
  CHECK_THROWS_AS(continue_monodromy(m, 2.0, 4096), OutsideDomain);
  // a path that jumps halfway around the circle
  std::vector<Complex> bad = {Complex(0.1, 0.0), Complex(-0.1, 0.0)};
  CHECK_THROWS_AS(continue_along(m, bad), BranchTrackingFailure);
  std::vector<Complex> through_zero = {Complex(0.1, 0.0), Complex(0.0, 0.0)};
  CHECK_THROWS_AS(continue_along(m, through_zero), BranchTrackingFailure);
}

TEST_CASE("branch state moves the pair by the monodromy") {
  LocalModel i1 = make(LocalModel::Kind::In, 1);
  PairSample a = sample_pair(i1, {0.1, 0.3});
  PairSample b = sample_pair(i1, {0.1, 0.3 + 2.0 * kPi});
  CHECK(std::abs(b.dz - a.dz) < 1e-14);
  CHECK(std::abs(b.dw - (a.dw + Complex(1.0, 0.0) * a.dz)) < 1e-14);
}

TEST_CASE("cone angles of the flat cones") {
  for (auto [p, q] : fixtures::admissible_betas()) {
    double want = 2.0 * kPi * p / q;
    CHECK(std::abs(cone_angle(type3(p, q), 1e-3) - want) < 1e-3);
  }
  // same exponents through the integral rows
  CHECK(std::abs(cone_angle(make(LocalModel::Kind::Istar0), 1e-3) - kPi) < 1e-3);
  CHECK(std::abs(cone_angle(make(LocalModel::Kind::II), 1e-3) -
                 2.0 * kPi * 5.0 / 6.0) < 1e-3);
}

TEST_CASE("cone angle with a perturbation converges as r -> 0") {
  LocalModel m = type3(3, 4);
  m.f = {Complex(0.15, -0.1), Complex(0.05, 0.02)};
  double want = 2.0 * kPi * 0.75;
  double a1 = cone_angle(m, 1e-3);
  double a2 = cone_angle(m, 5e-4);
  CHECK(std::abs(a1 - want) < 1e-2);
  CHECK(std::abs(a2 - want) < 1e-2);
  CHECK(std::abs(a2 - want) <= std::abs(a1 - want) + 1e-6);
}

TEST_CASE("the log-density point has full angle in the limit") {
  // density (n/4 pi)(-log s): C/L = 2 pi (1 - 1/(2 log(1/r)) + ...), so the
  // estimate sits near 2 pi and shrinks as r grows
  LocalModel i1 = make(LocalModel::Kind::In, 1);
  double a3 = cone_angle(i1, 1e-3);
  double a4 = cone_angle(i1, 1e-4);
  double a5 = cone_angle(i1, 1e-5);
  CHECK(a3 > 5.5);
  CHECK(a4 > a3);
  CHECK(a5 > a4);
  CHECK(a5 < 2.0 * kPi);
  CHECK(std::abs(a4 - 2.0 * kPi * (1.0 - 1.0 / (2.0 * std::log(1e4)))) < 0.05);
}

TEST_CASE("twist leaves the metric alone") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> rad(0.02, 0.4);
  std::uniform_real_distribution<double> th(0.0, 2.0 * kPi);
  std::vector<LocalModel> models = {make(LocalModel::Kind::In, 1),
                                    make(LocalModel::Kind::II), type3(1, 2),
                                    make(LocalModel::Kind::Istar0)};
  for (const LocalModel& m : models) {
    double dom = m.domain_radius();
    for (int i = 0; i < 100; ++i) {
      double theta = th(rng);
      Complex zeta = std::polar(rad(rng) * dom, ang(rng));
      CHECK(std::abs(density(twist(m, theta), zeta) - density(m, zeta)) <
            1e-12);
    }
  }
  // theta = 0 and theta = pi
  LocalModel m = make(LocalModel::Kind::II);
  CHECK(twist(m, 0.0).phase == m.phase);
  CHECK(std::abs(twist(m, kPi).phase + m.phase) < 1e-15);
  // twist is invisible to the monodromy
  CHECK(matrix_error(continue_monodromy(twist(m, 1.1), 0.1, 4096),
                     {0, 1, -1, 1}) < 1e-6);
}

TEST_CASE("recover_twist on constructed inputs") {
  LocalModel i1 = make(LocalModel::Kind::In, 1);

  TwistRelation r = recover_twist(i1, twist(i1, kPi / 4.0), 12);
  REQUIRE(r.status == TwistRelation::Status::Related);
  CHECK(std::abs(r.theta - kPi / 4.0) < 1e-8);
  CHECK((r.pair_change - Eigen::Matrix2d::Identity()).norm() < 1e-8);

  LocalModel moved = i1;
  moved.pair_change << 1, 1, 0, 1;
  r = recover_twist(i1, moved, 12);
  REQUIRE(r.status == TwistRelation::Status::Related);
  CHECK(std::abs(r.theta) < 1e-8);
  CHECK(std::abs(r.pair_change(0, 1) - 1.0) < 1e-8);

  // twist composed with a pair change
  LocalModel both = twist(i1, 1.0);
  both.pair_change << 2, 1, 1, 1;
  r = recover_twist(i1, both, 12);
  REQUIRE(r.status == TwistRelation::Status::Related);
  CHECK(std::abs(r.theta - 1.0) < 1e-8);
  CHECK((r.pair_change - both.pair_change).norm() < 1e-7);

  CHECK(recover_twist(type3(1, 2), type3(1, 3), 12).status ==
        TwistRelation::Status::NotRelated);
  CHECK(recover_twist(type3(1, 2), twist(type3(1, 2), 0.7), 12).status ==
        TwistRelation::Status::NotUnique);
  CHECK_THROWS_AS(recover_twist(i1, i1, 2), DegenerateSamples);
}

TEST_CASE("recover_twist inverts twist mod pi on non-flat models") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> th(0.0, 2.0 * kPi);
  LocalModel ii = make(LocalModel::Kind::II);
  ii.f = {Complex(0.08, 0.03)};
  LocalModel i2 = make(LocalModel::Kind::In, 2);
  for (const LocalModel& m : {ii, i2}) {
    for (int i = 0; i < 25; ++i) {
      double theta = th(rng);
      TwistRelation r = recover_twist(m, twist(m, theta), 10);
      REQUIRE(r.status == TwistRelation::Status::Related);
      double want = std::fmod(theta, kPi);
      if (want < 0) want += kPi;
      double diff = std::abs(r.theta - want);
      diff = std::min(diff, std::abs(diff - kPi));
      CHECK(diff < 1e-8);
    }
  }
}

TEST_CASE("curvature samples") {
  CHECK(std::abs(curvature_sample(type3(5, 6), Complex(0.1, 0.05), 1e-4)) <
        1e-6);
  CHECK(std::abs(curvature_sample(make(LocalModel::Kind::Istar0),
                                  Complex(0.1, 0.0), 1e-4)) < 1e-6);

  LocalModel i1 = make(LocalModel::Kind::In, 1);
  double k = curvature_sample(i1, Complex(0.1, 0.0), 1e-4);
  CHECK(k > 1e-6);
  // analytic value: -lap log(-log s) = 1/(s log s)^2, over twice the density
  double s = 0.1, logs = std::log(s);
  double analytic = (1.0 / (s * s * logs * logs)) /
                    (2.0 * (-(1.0 / (4.0 * kPi)) * logs));
  CHECK(std::abs(k - analytic) < 1e-3 * analytic);

  CHECK_THROWS_AS(curvature_sample(i1, Complex(1e-5, 0.0), 1e-4),
                  StencilOutsideDomain);
}

TEST_CASE("model json round trips") {
  std::vector<LocalModel> models;
  LocalModel ii = make(LocalModel::Kind::II);
  ii.f = {Complex(0.11, 0.05), Complex(-0.04, 0.02)};
  models.push_back(ii);
  models.push_back(make(LocalModel::Kind::In, 3));
  models.push_back(make(LocalModel::Kind::Instar, 2));
  models.push_back(type3(1, 6));
  LocalModel is0 = make(LocalModel::Kind::Istar0);
  is0.g = {Complex(1, 0.25)};
  is0.h = {Complex(0, 1)};
  models.push_back(is0);
  models.push_back(twist(make(LocalModel::Kind::III), 0.4));
  for (const LocalModel& m : models) {
    LocalModel echo = model_from_json(model_to_json(m));
    CHECK(echo.kind == m.kind);
    CHECK(echo.n == m.n);
    CHECK(echo.beta_frac == m.beta_frac);
    CHECK(echo.f == m.f);
    CHECK(std::abs(echo.phase - m.phase) < 1e-15);
  }
  // shorthand and flat coefficient lists
  LocalModel p = model_from_json(R"({"kind":"I2*","f":[0.5,0.25]})");
  CHECK(p.kind == LocalModel::Kind::Instar);
  CHECK(p.n == 2);
  REQUIRE(p.f.size() == 1);
  CHECK(p.f[0] == Complex(0.5, 0.25));

  CHECK_THROWS_AS(model_from_json(R"({"kind":"V"})"), ParseError);
  CHECK_THROWS_AS(model_from_json(R"({"kind":"Type3","beta":"2/5"})"),
                  ParseError);
  CHECK_THROWS_AS(model_from_json("not json"), ParseError);
}
