#pragma once

#include <string>
#include <vector>

#include "skmono/analytic.hpp"
#include "skmono/kodaira.hpp"
#include "skmono/mat2.hpp"

namespace skmono::fixtures {

/// The six I4 monodromy matrices of the hexagonal example (group Gamma(4));
/// ordered so their product is the identity.
const std::vector<IntMat2>& hjmm_matrices();

FiberConfig hjmm_config();

struct Table3Row {
  const char* spec;       // primary spec string
  const char* display;    // row label with its conjugacy partners
  int index;              // index in PSL2(Z)
  int ng;                 // expected N(G)
};

/// The fourteen-plus-one rows of the N(G) table, in index order.
const std::vector<Table3Row>& table3_rows();

struct TildePair {
  const char* lhs;
  const char* rhs;
};

/// Conjugate pairs marked with "~" in the N(G) table.
const std::vector<TildePair>& tilde_pairs();

struct ModelRow {
  LocalModel model;
  IntMat2 monodromy;  // exact expected matrix
};

/// The integral singular models with f = 0 (n = 1, 2 for the I / I* rows),
/// paired with their exact monodromy matrices.
const std::vector<ModelRow>& integral_model_rows();

/// The seven admissible cone parameters as (numerator, denominator).
const std::vector<std::pair<int, int>>& admissible_betas();

}  // namespace skmono::fixtures
