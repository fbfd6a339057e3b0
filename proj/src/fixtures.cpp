#include "skmono/fixtures.hpp"

namespace skmono::fixtures {

const std::vector<IntMat2>& hjmm_matrices() {
  static const std::vector<IntMat2> ms = {
      {1, 4, 0, 1},   {5, 4, -4, -3},  {1, 0, -4, 1},
      {-7, 4, -16, 9}, {-3, 4, -4, 5}, {-7, 16, -4, 9},
  };
  return ms;
}

FiberConfig hjmm_config() {
  FiberConfig cfg;
  cfg.mode = FiberConfig::Mode::BasedLoops;
  int k = 1;
  for (const IntMat2& m : hjmm_matrices())
    cfg.fibers.emplace_back("p" + std::to_string(k++), m);
  return cfg;
}

const std::vector<Table3Row>& table3_rows() {
  static const std::vector<Table3Row> rows = {
      {"SL2Z", "PSL2(Z)", 1, 1},
      {"GammaPow(2)", "GammaPow(2)", 2, 1},
      {"GammaPow(3)", "GammaPow(3)", 3, 1},
      {"Gamma0(2)", "Gamma0(2)", 3, 2},
      {"Gamma0(3)", "Gamma0(3)", 4, 2},
      {"Gamma(2)", "Gamma(2) ~ Gamma0(4)", 6, 4},
      {"Gamma1(5)", "Gamma1(5)", 12, 2},
      {"Gamma0(6)", "Gamma0(6)", 12, 4},
      {"Gamma(3)", "Gamma(3) ~ Gamma0(9)", 12, 5},
      {"Gamma0(8)", "Gamma0(8) ~ Intersect(Gamma0(4), Gamma(2))", 12, 6},
      {"Gamma1(7)", "Gamma1(7)", 24, 2},
      {"Gamma1(8)", "Gamma1(8)", 24, 6},
      {"Gamma1(8;4,1,2)", "Gamma1(8;4,1,2) ~ Gamma1(16;16,2,2)", 24, 6},
      {"Gamma0(12)", "Gamma0(12) ~ Intersect(Gamma0(3), Gamma(2))", 24, 8},
      {"Gamma(4)", "Gamma(4) ~ Gamma0(16) ~ Intersect(Gamma0(8), Gamma(2))",
       24, 10},
  };
  return rows;
}

const std::vector<TildePair>& tilde_pairs() {
  static const std::vector<TildePair> pairs = {
      {"Gamma(2)", "Gamma0(4)"},
      {"Gamma(3)", "Gamma0(9)"},
      {"Gamma0(8)", "Intersect(Gamma0(4), Gamma(2))"},
      {"Gamma0(12)", "Intersect(Gamma0(3), Gamma(2))"},
      {"Gamma(4)", "Gamma0(16)"},
      {"Gamma(4)", "Intersect(Gamma0(8), Gamma(2))"},
      {"Gamma1(8;4,1,2)", "Gamma1(16;16,2,2)"},
  };
  return pairs;
}

const std::vector<ModelRow>& integral_model_rows() {
  using K = LocalModel::Kind;
  auto mk = [](K kind, int n = 1) {
    LocalModel m;
    m.kind = kind;
    m.n = n;
    return m;
  };
  static const std::vector<ModelRow> rows = {
      {mk(K::In, 1), {1, 1, 0, 1}},
      {mk(K::In, 2), {1, 2, 0, 1}},
      {mk(K::Instar, 1), {-1, -1, 0, -1}},
      {mk(K::Instar, 2), {-1, -2, 0, -1}},
      {mk(K::Istar0), {-1, 0, 0, -1}},
      {mk(K::II), {0, 1, -1, 1}},
      {mk(K::IIstar), {1, -1, 1, 0}},
      {mk(K::III), {0, 1, -1, 0}},
      {mk(K::IIIstar), {0, -1, 1, 0}},
      {mk(K::IV), {-1, 1, -1, 0}},
      {mk(K::IVstar), {0, -1, 1, -1}},
  };
  return rows;
}

const std::vector<std::pair<int, int>>& admissible_betas() {
  static const std::vector<std::pair<int, int>> betas = {
      {1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 6}, {5, 6},
  };
  return betas;
}

}  // namespace skmono::fixtures
