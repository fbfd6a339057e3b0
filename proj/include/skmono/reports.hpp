#pragma once

#include <string>
#include <vector>

#include "skmono/fixtures.hpp"
#include "skmono/kodaira.hpp"

namespace skmono {

struct Table3Entry {
  std::string display;
  int expected_index = 0;
  int expected_ng = 0;
  int index = 0;
  Int exponent = 1;
  int ng = 0;
  bool pass = false;
};

struct Table3Report {
  std::vector<Table3Entry> rows;
  bool all_pass = false;
};

/// Computes index and N(G) for every row and compares with the recorded
/// values. The row list is a parameter so harnesses can run altered tables.
Table3Report run_table3(const std::vector<fixtures::Table3Row>& rows,
                        int cap = 10000);

struct HjmmStage {
  std::string name;            // "q=1", "q=2", "q=4"
  std::vector<std::string> types;  // sorted classification labels
  std::string expected_group;
  int index = 0;
  bool product_ok = false;
  bool sum_ok = false;
  bool types_ok = false;
  bool group_ok = false;

  bool pass() const { return product_ok && sum_ok && types_ok && group_ok; }
};

struct HjmmReport {
  std::vector<HjmmStage> stages;
  bool all_pass = false;
};

/// The three-stage walk through the hexagonal fixture: validation and group
/// identification of the base configuration and of its q = 2, 4 rescalings.
HjmmReport run_example_hjmm(int cap = 10000);

std::vector<std::string> sorted_type_names(const FiberConfig& cfg);

}  // namespace skmono
