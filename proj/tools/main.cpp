// skmono command line: exact monodromy arithmetic for integral special
// Kahler structures on the sphere, plus the numerical local models.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "skmono/analytic.hpp"
#include "skmono/cosets.hpp"
#include "skmono/errors.hpp"
#include "skmono/fixtures.hpp"
#include "skmono/kodaira.hpp"
#include "skmono/ng.hpp"
#include "skmono/reports.hpp"
#include "skmono/subgroup.hpp"

namespace {

using namespace skmono;
using ordered_json = nlohmann::ordered_json;

// exit codes: 0 ok, 2 validation mismatch, 3 parse error, 4 cap exceeded,
// 5 numeric failure
constexpr int kOk = 0;
constexpr int kMismatch = 2;
constexpr int kParse = 3;
constexpr int kCap = 4;
constexpr int kNumeric = 5;

struct Options {
  std::vector<std::string> groups;
  std::string matrix;
  std::string file;
  std::string model;
  std::string q = "1";
  std::string zeta = "0.1,0";
  std::string b_matrix;
  long long m_value = 1;
  double radius = 0.1;
  int steps = 4096;
  double h = 1e-4;
  bool json = false;
  bool pretty = false;
  int cap = 10000;
};

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational: " + s);
  }
}

Complex parse_complex(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
    return Complex(std::stod(s.substr(0, comma)),
                   std::stod(s.substr(comma + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad complex literal (want re,im): " + s);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string payload(const Options& opt, const std::string& inline_text) {
  if (!inline_text.empty()) return inline_text;
  if (!opt.file.empty()) return slurp(opt.file);
  throw ParseError("no input: pass inline JSON or --file");
}

LocalModel load_model(const Options& opt) {
  return model_from_json(payload(opt, opt.model));
}

FiberConfig load_config(const Options& opt) {
  return fiber_config_from_json(payload(opt, ""));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json type_json(const KodairaType& t) {
  ordered_json j;
  j["type"] = t.str();
  j["index12"] = t.index12().str();
  if (auto b = t.beta())
    j["beta"] = std::to_string(b->first) + "/" + std::to_string(b->second);
  return j;
}

ordered_json witness_json(const Conjugator& c) {
  return ordered_json{{"B", format_intmat2(c.b)}, {"m", c.m.str()}};
}

int cmd_classify(const Options& opt) {
  IntMat2 a = parse_intmat2(opt.matrix);
  KodairaType t = classify(a);
  ordered_json j;
  j["matrix"] = format_intmat2(a);
  j.update(type_json(t));
  emit(j);
  return kOk;
}

int cmd_ng(const Options& opt) {
  if (opt.groups.empty()) throw ParseError("ng needs --group");
  SubgroupSpec g = parse_group(opt.groups[0]);
  NgResult r = compute_ng(g, opt.cap);
  ordered_json j;
  j["group"] = g.str();
  j["index"] = r.index;
  j["exponent_n"] = r.exponent.str();
  j["count"] = r.count;
  j["witnesses"] = ordered_json::array();
  for (const Conjugator& c : r.witnesses)
    j["witnesses"].push_back(witness_json(c));
  emit(j);
  return kOk;
}

int cmd_table3(const Options& opt) {
  Table3Report report = run_table3(fixtures::table3_rows(), opt.cap);
  if (opt.json && !opt.pretty) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const Table3Entry& e : report.rows) {
      j["rows"].push_back({{"group", e.display},
                           {"index", e.index},
                           {"expected_index", e.expected_index},
                           {"exponent_n", e.exponent.str()},
                           {"actual_N", e.ng},
                           {"expected_N", e.expected_ng},
                           {"pass", e.pass}});
    }
    j["pass"] = report.all_pass;
    emit(j);
  } else {
    std::cout << std::left << std::setw(56) << "group" << std::right
              << std::setw(6) << "index" << std::setw(6) << "want"
              << std::setw(5) << "n" << std::setw(5) << "N" << std::setw(6)
              << "want" << "  result\n";
    for (const Table3Entry& e : report.rows) {
      std::cout << std::left << std::setw(56) << e.display << std::right
                << std::setw(6) << e.index << std::setw(6) << e.expected_index
                << std::setw(5) << e.exponent << std::setw(5) << e.ng
                << std::setw(6) << e.expected_ng << "  "
                << (e.pass ? "PASS" : "FAIL") << "\n";
    }
    std::cout << (report.all_pass ? "all rows PASS" : "FAILURES present")
              << "\n";
  }
  return report.all_pass ? kOk : kMismatch;
}

int cmd_example(const Options& opt, bool q_given) {
  if (q_given) {
    FiberConfig cfg =
        rescale_config(fixtures::hjmm_config(), parse_rational(opt.q));
    ValidationReport v = validate_config(cfg);
    ordered_json j;
    j["q"] = opt.q;
    j["config"] = ordered_json::parse(fiber_config_to_json(cfg));
    j["types"] = sorted_type_names(cfg);
    j["product_ok"] = v.product_ok;
    j["index_sum"] = v.index_sum.str();
    emit(j);
    return v.valid() ? kOk : kMismatch;
  }
  HjmmReport report = run_example_hjmm(opt.cap);
  if (opt.pretty) {
    for (const HjmmStage& s : report.stages) {
      std::cout << s.name << ": ";
      for (const auto& t : s.types) std::cout << t << " ";
      std::cout << "| index " << s.index << " | group " << s.expected_group
                << " | " << (s.pass() ? "PASS" : "FAIL") << "\n";
    }
    std::cout << (report.all_pass ? "example: PASS" : "example: FAIL") << "\n";
  } else {
    ordered_json j;
    j["stages"] = ordered_json::array();
    for (const HjmmStage& s : report.stages) {
      j["stages"].push_back({{"stage", s.name},
                             {"types", s.types},
                             {"product_ok", s.product_ok},
                             {"sum_ok", s.sum_ok},
                             {"types_ok", s.types_ok},
                             {"group", s.expected_group},
                             {"index", s.index},
                             {"group_ok", s.group_ok},
                             {"pass", s.pass()}});
    }
    j["pass"] = report.all_pass;
    emit(j);
  }
  return report.all_pass ? kOk : kMismatch;
}

int cmd_config_validate(const Options& opt) {
  FiberConfig cfg = load_config(opt);
  ValidationReport v = validate_config(cfg);
  ordered_json j;
  j["types"] = ordered_json::array();
  for (const KodairaType& t : v.types) j["types"].push_back(t.str());
  j["product_ok"] = v.product_ok;
  j["index_sum"] = v.index_sum.str();
  j["sum_ok"] = v.sum_ok;
  j["count_ok"] = v.count_ok;
  j["flat"] = v.flat;
  j["valid"] = v.valid();
  emit(j);
  return v.valid() ? kOk : kMismatch;
}

int cmd_config_rescale(const Options& opt) {
  FiberConfig cfg = rescale_config(load_config(opt), parse_rational(opt.q));
  ordered_json j;
  j["q"] = opt.q;
  j["config"] = ordered_json::parse(fiber_config_to_json(cfg));
  j["types"] = sorted_type_names(cfg);
  emit(j);
  return kOk;
}

int cmd_config_group(const Options& opt) {
  FiberConfig cfg = load_config(opt);
  SubgroupSpec g = monodromy_group(cfg);
  ordered_json j;
  j["group"] = g.str();
  j["index"] = subgroup_index(g, opt.cap);
  emit(j);
  return kOk;
}

int cmd_group_index(const Options& opt) {
  if (opt.groups.empty()) throw ParseError("group index needs --group");
  SubgroupSpec g = parse_group(opt.groups[0]);
  ordered_json j;
  j["group"] = g.str();
  j["index"] = subgroup_index(g, opt.cap);
  emit(j);
  return kOk;
}

int cmd_group_equal(const Options& opt) {
  if (opt.groups.size() < 2) throw ParseError("group equal needs two --group");
  SubgroupSpec a = parse_group(opt.groups[0]);
  SubgroupSpec b = parse_group(opt.groups[1]);
  bool eq = subgroups_equal(a, b, opt.cap);
  ordered_json j;
  j["lhs"] = a.str();
  j["rhs"] = b.str();
  j["equal"] = eq;
  emit(j);
  return eq ? kOk : kMismatch;
}

int cmd_group_conjugate(const Options& opt) {
  if (opt.groups.empty()) throw ParseError("group conjugate needs --group");
  SubgroupSpec g = parse_group(opt.groups[0]);
  Conjugator c = make_conjugator(parse_intmat2(opt.b_matrix), opt.m_value);
  SubgroupSpec conj = conjugate_subgroup(g, c, opt.cap);
  ordered_json j;
  j["group"] = g.str();
  j["conjugator"] = witness_json(c);
  j["result"] = conj.str();
  j["index"] = subgroup_index(conj, opt.cap);
  emit(j);
  return kOk;
}

int cmd_monodromy(const Options& opt) {
  LocalModel model = load_model(opt);
  Eigen::Matrix2d a = continue_monodromy(model, opt.radius, opt.steps);
  ordered_json j;
  j["model"] = ordered_json::parse(model_to_json(model));
  j["radius"] = opt.radius;
  j["steps"] = opt.steps;
  j["matrix"] = {{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}};
  IntMat2 rounded{Int(std::llround(a(0, 0))), Int(std::llround(a(0, 1))),
                  Int(std::llround(a(1, 0))), Int(std::llround(a(1, 1)))};
  double err = std::max({std::abs(a(0, 0) - std::llround(a(0, 0))),
                         std::abs(a(0, 1) - std::llround(a(0, 1))),
                         std::abs(a(1, 0) - std::llround(a(1, 0))),
                         std::abs(a(1, 1) - std::llround(a(1, 1)))});
  if (err < 1e-6 && det(rounded) == 1) {
    j["rounded"] = format_intmat2(rounded);
    j["type"] = classify(rounded).str();
  }
  emit(j);
  return kOk;
}

int cmd_coneangle(const Options& opt) {
  LocalModel model = load_model(opt);
  double angle = cone_angle(model, opt.radius);
  ordered_json j;
  j["model"] = ordered_json::parse(model_to_json(model));
  j["radius"] = opt.radius;
  j["angle"] = angle;
  j["angle_over_2pi"] = angle / (2.0 * 3.14159265358979323846);
  emit(j);
  return kOk;
}

int cmd_density(const Options& opt) {
  LocalModel model = load_model(opt);
  Complex zeta = parse_complex(opt.zeta);
  ordered_json j;
  j["model"] = ordered_json::parse(model_to_json(model));
  j["zeta"] = {zeta.real(), zeta.imag()};
  j["density"] = density(model, zeta);
  j["reference"] = reference_density(model, zeta);
  emit(j);
  return kOk;
}

int cmd_curvature(const Options& opt) {
  LocalModel model = load_model(opt);
  Complex zeta = parse_complex(opt.zeta);
  ordered_json j;
  j["model"] = ordered_json::parse(model_to_json(model));
  j["zeta"] = {zeta.real(), zeta.imag()};
  j["h"] = opt.h;
  j["curvature"] = curvature_sample(model, zeta, opt.h);
  emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "skmono: Kodaira classification, fiber-configuration checks, congruence"
      " subgroup machinery, the integral-structure count N(G), and numerical"
      " local singular models.\n"
      "Exit codes: 0 ok, 2 validation mismatch, 3 parse error,"
      " 4 cap exceeded, 5 numeric failure."};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--pretty", opt.pretty, "human-readable output");
    sub->add_option("--cap", opt.cap, "coset cap for enumerations");
  };

  auto* classify_cmd =
      app.add_subcommand("classify", "Kodaira type of a matrix");
  classify_cmd->add_option("--matrix", opt.matrix, "matrix literal a,b;c,d")
      ->required();
  add_common(classify_cmd);

  auto* ng_cmd = app.add_subcommand("ng", "count integral structures N(G)");
  ng_cmd->add_option("--group", opt.groups, "group spec");
  add_common(ng_cmd);

  auto* table3_cmd =
      app.add_subcommand("table3", "recompute the N(G) table and compare");
  add_common(table3_cmd);

  auto* example_cmd = app.add_subcommand(
      "example-hjmm", "the hexagonal 6xI4 example and its rescalings");
  auto* qopt = example_cmd->add_option("--q", opt.q, "rescale only, by q");
  add_common(example_cmd);

  auto* config_cmd = app.add_subcommand("config", "fiber configurations");
  config_cmd->require_subcommand(1);
  auto* cfg_validate = config_cmd->add_subcommand("validate", "check a config");
  auto* cfg_rescale = config_cmd->add_subcommand("rescale", "rescale a config");
  auto* cfg_group = config_cmd->add_subcommand("group", "monodromy group");
  for (CLI::App* sub : {cfg_validate, cfg_rescale, cfg_group}) {
    sub->add_option("--file", opt.file, "config JSON file")->required();
    add_common(sub);
  }
  cfg_rescale->add_option("--q", opt.q, "rational scale factor");

  auto* group_cmd = app.add_subcommand("group", "subgroup operations");
  group_cmd->require_subcommand(1);
  auto* grp_index = group_cmd->add_subcommand("index", "index in PSL2(Z)");
  auto* grp_equal = group_cmd->add_subcommand("equal", "subgroup equality");
  auto* grp_conj = group_cmd->add_subcommand("conjugate", "conjugate a spec");
  for (CLI::App* sub : {grp_index, grp_equal, grp_conj}) {
    sub->add_option("--group", opt.groups, "group spec (repeat for equal)");
    add_common(sub);
  }
  grp_conj->add_option("--b", opt.b_matrix, "conjugator matrix B")->required();
  grp_conj->add_option("--m", opt.m_value, "conjugator determinant m")
      ->required();

  auto* mono_cmd = app.add_subcommand("monodromy", "numeric loop monodromy");
  auto* cone_cmd = app.add_subcommand("coneangle", "cone angle estimate");
  auto* dens_cmd = app.add_subcommand("density", "Kahler density at a point");
  auto* curv_cmd = app.add_subcommand("curvature", "curvature sample");
  for (CLI::App* sub : {mono_cmd, cone_cmd, dens_cmd, curv_cmd}) {
    sub->add_option("--model", opt.model, "model JSON (inline)");
    sub->add_option("--file", opt.file, "model JSON file");
    add_common(sub);
  }
  mono_cmd->add_option("--radius", opt.radius, "loop radius");
  mono_cmd->add_option("--steps", opt.steps, "continuation steps");
  cone_cmd->add_option("--radius", opt.radius, "estimate radius");
  dens_cmd->add_option("--zeta", opt.zeta, "evaluation point re,im");
  curv_cmd->add_option("--zeta", opt.zeta, "evaluation point re,im");
  curv_cmd->add_option("--stencil", opt.h, "stencil size h");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return cmd_classify(opt);
    if (*ng_cmd) return cmd_ng(opt);
    if (*table3_cmd) return cmd_table3(opt);
    if (*example_cmd) return cmd_example(opt, qopt->count() > 0);
    if (*cfg_validate) return cmd_config_validate(opt);
    if (*cfg_rescale) return cmd_config_rescale(opt);
    if (*cfg_group) return cmd_config_group(opt);
    if (*grp_index) return cmd_group_index(opt);
    if (*grp_equal) return cmd_group_equal(opt);
    if (*grp_conj) return cmd_group_conjugate(opt);
    if (*mono_cmd) return cmd_monodromy(opt);
    if (*cone_cmd) return cmd_coneangle(opt);
    if (*dens_cmd) return cmd_density(opt);
    if (*curv_cmd) return cmd_curvature(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const IndexCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const OutsideDomain& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const NonPositiveDensity& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const BranchTrackingFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const QuadratureFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const DegenerateSamples& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const StencilOutsideDomain& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
