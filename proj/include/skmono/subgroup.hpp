#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "skmono/conjugator.hpp"
#include "skmono/mat2.hpp"

namespace skmono {

/// Predicate on a residue matrix mod m; entries arrive reduced into [0, m).
using CongruencePredicate = std::function<bool(long, long, long, long)>;

/// A finite-index subgroup of SL2(Z) or PSL2(Z), given by a membership
/// oracle. Projective mode (the default) identifies A with -A.
///
/// Specs are immutable values; copying is cheap (shared nodes). Generated
/// specs build their coset table lazily on first membership query and are
/// safe for concurrent reads afterwards.
class SubgroupSpec {
 public:
  SubgroupSpec() = default;  // the full group

  static SubgroupSpec full();
  static SubgroupSpec gamma(long m);    // A = I mod m
  static SubgroupSpec gamma0(long m);   // c = 0 mod m
  static SubgroupSpec gamma1(long m);   // c = 0, a = d = 1 mod m
  static SubgroupSpec gamma_pow(int n); // generated by n-th powers, n in {2,3}
  static SubgroupSpec gamma1_8_4_1_2();     // [[1+4a,2b],[4c,1+4d]], a = c mod 2
  static SubgroupSpec gamma1_16_16_2_2();   // [[1+4a,b],[8c,1+4d]], a = c mod 2
  static SubgroupSpec congruence(long modulus, CongruencePredicate pred,
                                 std::string label);
  static SubgroupSpec generated(std::vector<IntMat2> gens, int cap = 10000);
  static SubgroupSpec conjugated(SubgroupSpec base, Conjugator by);
  static SubgroupSpec intersection(SubgroupSpec a, SubgroupSpec b);

  SubgroupSpec as_projective(bool flag) const;
  bool projective() const { return projective_; }

  /// Membership oracle. Throws NotUnimodular for det != 1.
  bool contains(const IntMat2& a) const;

  /// Spec string in the CLI grammar.
  std::string str() const;

  /// Generators when the spec is a Generated variant (empty otherwise).
  const std::vector<IntMat2>* generated_gens() const;

 private:
  struct Node;
  explicit SubgroupSpec(std::shared_ptr<const Node> node, bool projective)
      : node_(std::move(node)), projective_(projective) {}

  std::shared_ptr<const Node> node_;
  bool projective_ = true;
};

/// Parses the spec grammar: SL2Z, Gamma(m), Gamma0(m), Gamma1(m),
/// GammaPow(n), Gamma1(8;4,1,2), Gamma1(16;16,2,2),
/// Generated[a,b;c,d | ...], Conj(spec; B=a,b;c,d; m=k),
/// Intersect(spec, spec). Throws ParseError.
SubgroupSpec parse_group(const std::string& text);

}  // namespace skmono
