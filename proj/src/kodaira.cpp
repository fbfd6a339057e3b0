#include "skmono/kodaira.hpp"

#include <nlohmann/json.hpp>

#include "skmono/errors.hpp"

namespace skmono {

using ordered_json = nlohmann::ordered_json;

Int KodairaType::index12() const {
  switch (kind) {
    case Kind::Smooth: return 0;
    case Kind::I: return n;
    case Kind::Istar: return n + 6;
    case Kind::II: return 2;
    case Kind::IIstar: return 10;
    case Kind::III: return 3;
    case Kind::IIIstar: return 9;
    case Kind::IV: return 4;
    case Kind::IVstar: return 8;
  }
  return 0;
}

std::optional<std::pair<int, int>> KodairaType::beta() const {
  switch (kind) {
    case Kind::II: return {{5, 6}};
    case Kind::IIstar: return {{1, 6}};
    case Kind::III: return {{3, 4}};
    case Kind::IIIstar: return {{1, 4}};
    case Kind::IV: return {{2, 3}};
    case Kind::IVstar: return {{1, 3}};
    case Kind::Istar:
      if (n == 0) return {{1, 2}};
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::string KodairaType::str() const {
  switch (kind) {
    case Kind::Smooth: return "I0";
    case Kind::I: return "I" + n.str();
    case Kind::Istar: return "I" + n.str() + "*";
    case Kind::II: return "II";
    case Kind::IIstar: return "II*";
    case Kind::III: return "III";
    case Kind::IIIstar: return "III*";
    case Kind::IV: return "IV";
    case Kind::IVstar: return "IV*";
  }
  return "?";
}

KodairaType KodairaType::parse(const std::string& name) {
  auto starred = [](const std::string& s) {
    return !s.empty() && s.back() == '*';
  };
  std::string base = starred(name) ? name.substr(0, name.size() - 1) : name;
  bool star = starred(name);
  if (base == "II") return {star ? Kind::IIstar : Kind::II, 0};
  if (base == "III") return {star ? Kind::IIIstar : Kind::III, 0};
  if (base == "IV") return {star ? Kind::IVstar : Kind::IV, 0};
  if (base.size() >= 2 && base[0] == 'I') {
    std::string digits = base.substr(1);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad fiber type: " + name);
    }
    Int n(digits);
    if (star) return {Kind::Istar, n};
    if (n == 0) return {Kind::Smooth, 0};
    return {Kind::I, n};
  }
  throw ParseError("bad fiber type: " + name);
}

KodairaType classify(const IntMat2& a, bool projective) {
  if (projective)
    throw std::invalid_argument(
        "classify runs in SL2 only: the sign separates I(n) from I(n)*");
  if (!is_unimodular(a)) throw NotUnimodular("classify: det != 1");
  Int tr = trace(a);
  if (tr == 2) {
    if (a == kId) return {KodairaType::Kind::Smooth, 0};
    if (a.c < 0 || (a.c == 0 && a.b > 0))
      return {KodairaType::Kind::I, content(a - kId)};
    throw ForbiddenOrientation("monodromy conjugate to I(-n): " +
                               format_intmat2(a));
  }
  if (tr == -2) {
    KodairaType inner = classify(-a, false);
    return {KodairaType::Kind::Istar,
            inner.kind == KodairaType::Kind::Smooth ? Int(0) : inner.n};
  }
  if (tr == 0)
    return {a.c < 0 ? KodairaType::Kind::III : KodairaType::Kind::IIIstar, 0};
  if (tr == 1)
    return {a.c < 0 ? KodairaType::Kind::II : KodairaType::Kind::IIstar, 0};
  if (tr == -1)
    return {a.c < 0 ? KodairaType::Kind::IV : KodairaType::Kind::IVstar, 0};
  throw HyperbolicMonodromy("trace " + tr.str() + " outside [-2,2]: " +
                            format_intmat2(a));
}

namespace {

bool is_elliptic_kind(const KodairaType& t) {
  using K = KodairaType::Kind;
  switch (t.kind) {
    case K::II:
    case K::IIstar:
    case K::III:
    case K::IIIstar:
    case K::IV:
    case K::IVstar: return true;
    case K::Istar: return t.n == 0;
    default: return false;
  }
}

}  // namespace

ValidationReport validate_config(const FiberConfig& cfg) {
  ValidationReport report;
  if (cfg.mode == FiberConfig::Mode::BasedLoops) {
    IntMat2 product = kId;
    for (const auto& [label, m] : cfg.fibers) {
      report.types.push_back(classify(m));
      product = product * m;
    }
    report.product_ok = product == kId;
  } else {
    report.types = cfg.types;
  }
  report.index_sum = 0;
  for (const KodairaType& t : report.types) report.index_sum += t.index12();
  report.sum_ok = report.index_sum == 24;
  report.count_ok = report.types.size() <= 24;
  report.flat = !report.types.empty();
  for (const KodairaType& t : report.types)
    report.flat = report.flat && is_elliptic_kind(t);
  return report;
}

FiberConfig rescale_config(const FiberConfig& cfg, const Rat& q) {
  if (cfg.mode != FiberConfig::Mode::BasedLoops)
    throw std::invalid_argument("rescale needs monodromy matrices");
  if (q <= 0) throw std::invalid_argument("rescale: q > 0 required");
  FiberConfig out;
  out.mode = FiberConfig::Mode::BasedLoops;
  for (const auto& [label, m] : cfg.fibers) {
    Rat b = Rat(m.b) / q;
    Rat c = Rat(m.c) * q;
    if (denominator(b) != 1 || denominator(c) != 1)
      throw NonIntegralRescale("fiber " + label + ": " + format_intmat2(m) +
                               " does not rescale integrally");
    out.fibers.emplace_back(label,
                            IntMat2{m.a, numerator(b), numerator(c), m.d});
  }
  return out;
}

SubgroupSpec monodromy_group(const FiberConfig& cfg, bool projective) {
  if (cfg.mode != FiberConfig::Mode::BasedLoops)
    throw std::invalid_argument("monodromy group needs monodromy matrices");
  std::vector<IntMat2> gens;
  gens.reserve(cfg.fibers.size());
  for (const auto& [label, m] : cfg.fibers) gens.push_back(m);
  return SubgroupSpec::generated(std::move(gens)).as_projective(projective);
}

FiberConfig fiber_config_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fiber config JSON: ") + e.what());
  }
  FiberConfig cfg;
  std::string mode = j.value("mode", "based");
  if (mode == "based") {
    cfg.mode = FiberConfig::Mode::BasedLoops;
    int k = 1;
    for (const auto& f : j.at("fibers")) {
      std::string label =
          f.contains("label") ? f.at("label").get<std::string>()
                              : ("p" + std::to_string(k));
      cfg.fibers.emplace_back(label,
                              parse_intmat2(f.at("matrix").get<std::string>()));
      ++k;
    }
  } else if (mode == "types") {
    cfg.mode = FiberConfig::Mode::TypesOnly;
    for (const auto& f : j.at("fibers"))
      cfg.types.push_back(KodairaType::parse(f.get<std::string>()));
  } else {
    throw ParseError("fiber config: mode must be 'based' or 'types'");
  }
  return cfg;
}

std::string fiber_config_to_json(const FiberConfig& cfg) {
  ordered_json j;
  if (cfg.mode == FiberConfig::Mode::BasedLoops) {
    j["mode"] = "based";
    j["fibers"] = ordered_json::array();
    for (const auto& [label, m] : cfg.fibers)
      j["fibers"].push_back({{"label", label}, {"matrix", format_intmat2(m)}});
  } else {
    j["mode"] = "types";
    j["fibers"] = ordered_json::array();
    for (const KodairaType& t : cfg.types) j["fibers"].push_back(t.str());
  }
  return j.dump();
}

}  // namespace skmono
