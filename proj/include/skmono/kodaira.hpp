#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skmono/mat2.hpp"
#include "skmono/subgroup.hpp"

namespace skmono {

/// Kodaira fiber type of an SL2(Z) monodromy matrix. Smooth is serialized
/// as "I0"; starred types carry a trailing '*'.
struct KodairaType {
  enum class Kind { Smooth, I, Istar, II, IIstar, III, IIIstar, IV, IVstar };

  Kind kind = Kind::Smooth;
  Int n = 0;  // the n of I(n) / Istar(n)

  /// Euler-number numerator over 12: n for I(n), n+6 for I(n)*, 12(1-beta)
  /// for the elliptic kinds, 0 for a smooth fiber.
  Int index12() const;

  /// Cone parameter beta for the elliptic kinds (including I0* -> 1/2);
  /// empty for Smooth and I(n)/I(n)* with n > 0.
  std::optional<std::pair<int, int>> beta() const;

  std::string str() const;
  static KodairaType parse(const std::string& name);

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
  friend bool operator<(const KodairaType& x, const KodairaType& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.n < y.n;
  }
};

/// Trace classification per the integral singular models:
///   tr =  2: I with A = I -> Smooth, else I(content(A-I)) when the
///            orientation is admissible (c < 0, or c = 0 and b > 0);
///   tr = -2: the starred version of classify(-A);
///   |tr| < 2: elliptic, decided by (trace, sign of c).
/// Throws HyperbolicMonodromy for |tr| > 2 and ForbiddenOrientation for the
/// inadmissible parabolic orientation. The classification is an SL2
/// invariant; projective mode is rejected (the sign separates I(n) from
/// I(n)*).
KodairaType classify(const IntMat2& a, bool projective = false);

/// Ordered singular-fiber data: labeled monodromy matrices (BasedLoops) or
/// a bare multiset of types (TypesOnly).
struct FiberConfig {
  enum class Mode { BasedLoops, TypesOnly };

  Mode mode = Mode::BasedLoops;
  std::vector<std::pair<std::string, IntMat2>> fibers;  // BasedLoops
  std::vector<KodairaType> types;                       // TypesOnly
};

struct ValidationReport {
  bool product_ok = true;  // ordered product = I (BasedLoops only)
  Int index_sum = 0;       // sum of index12
  bool sum_ok = false;     // index_sum == 24
  bool count_ok = false;   // at most 24 fibers
  bool flat = false;       // all monodromies elliptic (isotrivial case)
  std::vector<KodairaType> types;

  bool valid() const { return product_ok && sum_ok && count_ok; }
};

/// Classification errors from individual fibers propagate.
ValidationReport validate_config(const FiberConfig& cfg);

/// Conjugation by diag(lambda, 1/lambda) with lambda^2 = q:
/// [[a,b],[c,d]] -> [[a, b/q],[q c, d]]. BasedLoops only; throws
/// NonIntegralRescale when some b/q or q*c is not integral.
FiberConfig rescale_config(const FiberConfig& cfg, const Rat& q);

/// Generated subgroup spec of the fiber matrices (BasedLoops only).
SubgroupSpec monodromy_group(const FiberConfig& cfg, bool projective = true);

/// JSON wire format:
///   {"mode":"based","fibers":[{"label":"p1","matrix":"1,4;0,1"}, ...]}
///   {"mode":"types","fibers":["I4","I4", ...]}
FiberConfig fiber_config_from_json(const std::string& json_text);
std::string fiber_config_to_json(const FiberConfig& cfg);

}  // namespace skmono
