#include "skmono/reports.hpp"

#include <algorithm>

#include "skmono/cosets.hpp"
#include "skmono/ng.hpp"

namespace skmono {

Table3Report run_table3(const std::vector<fixtures::Table3Row>& rows, int cap) {
  Table3Report report;
  report.all_pass = true;
  for (const auto& row : rows) {
    SubgroupSpec g = parse_group(row.spec);
    NgResult r = compute_ng(g, cap);
    Table3Entry e;
    e.display = row.display;
    e.expected_index = row.index;
    e.expected_ng = row.ng;
    e.index = r.index;
    e.exponent = r.exponent;
    e.ng = r.count;
    e.pass = r.index == row.index && r.count == row.ng;
    report.all_pass = report.all_pass && e.pass;
    report.rows.push_back(std::move(e));
  }
  return report;
}

std::vector<std::string> sorted_type_names(const FiberConfig& cfg) {
  std::vector<std::string> out;
  if (cfg.mode == FiberConfig::Mode::BasedLoops) {
    for (const auto& [label, m] : cfg.fibers) out.push_back(classify(m).str());
  } else {
    for (const KodairaType& t : cfg.types) out.push_back(t.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

HjmmReport run_example_hjmm(int cap) {
  HjmmReport report;
  report.all_pass = true;

  struct Stage {
    const char* name;
    Rat q;
    std::vector<std::string> expected_types;
    const char* expected_group;
  };
  const Stage stages[] = {
      {"q=1", Rat(1),
       {"I4", "I4", "I4", "I4", "I4", "I4"},
       "Gamma(4)"},
      {"q=2", Rat(2),
       {"I2", "I2", "I2", "I2", "I8", "I8"},
       "Intersect(Gamma0(8), Gamma(2))"},
      {"q=4", Rat(4),
       {"I1", "I1", "I1", "I1", "I16", "I4"},
       "Gamma0(16)"},
  };

  for (const Stage& s : stages) {
    FiberConfig cfg = rescale_config(fixtures::hjmm_config(), s.q);
    ValidationReport v = validate_config(cfg);
    HjmmStage out;
    out.name = s.name;
    out.types = sorted_type_names(cfg);
    out.expected_group = s.expected_group;
    out.product_ok = v.product_ok;
    out.sum_ok = v.sum_ok && v.count_ok;
    std::vector<std::string> want = s.expected_types;
    std::sort(want.begin(), want.end());
    out.types_ok = out.types == want;
    SubgroupSpec g = monodromy_group(cfg);
    out.index = subgroup_index(g, cap);
    out.group_ok = subgroups_equal(g, parse_group(s.expected_group), cap);
    report.all_pass = report.all_pass && out.pass();
    report.stages.push_back(std::move(out));
  }
  return report;
}

}  // namespace skmono
