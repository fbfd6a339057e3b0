#include <doctest.h>

#include "skmono/ng.hpp"
#include "skmono/reports.hpp"

using namespace skmono;

TEST_CASE("table report passes on the recorded values") {
  Table3Report r = run_table3(fixtures::table3_rows());
  CHECK(r.all_pass);
  CHECK(r.rows.size() == 15);
}

TEST_CASE("table report flags an altered row") {
  auto rows = fixtures::table3_rows();
  rows[3].ng = 3;  // Gamma0(2) really has N = 2
  Table3Report r = run_table3(rows);
  CHECK_FALSE(r.all_pass);
  CHECK_FALSE(r.rows[3].pass);
  int failing = 0;
  for (const auto& e : r.rows) failing += e.pass ? 0 : 1;
  CHECK(failing == 1);
}

TEST_CASE("example report passes and is deterministic") {
  HjmmReport a = run_example_hjmm();
  HjmmReport b = run_example_hjmm();
  CHECK(a.all_pass);
  REQUIRE(a.stages.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.stages[i].types == b.stages[i].types);
    CHECK(a.stages[i].index == b.stages[i].index);
  }
}

TEST_CASE("witness lists are reproducible") {
  NgResult a = compute_ng(parse_group("Gamma0(8)"));
  NgResult b = compute_ng(parse_group("Gamma0(8)"));
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i)
    CHECK(a.witnesses[i] == b.witnesses[i]);
  // m ascending, Hermite-lexicographic within each m
  for (std::size_t i = 1; i < a.witnesses.size(); ++i) {
    const Conjugator& p = a.witnesses[i - 1];
    const Conjugator& q = a.witnesses[i];
    bool ordered = p.m < q.m || (p.m == q.m && p.b < q.b);
    CHECK(ordered);
  }
}
