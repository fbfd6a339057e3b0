#pragma once

#include <array>
#include <vector>

#include "skmono/subgroup.hpp"

namespace skmono {

/// Right-coset table of a finite-index subgroup: representatives G*r_i with
/// r_0 = I, and the permutation action of S, T, T^-1 by right multiplication.
struct CosetTable {
  std::vector<IntMat2> reps;
  std::array<std::vector<int>, 3> action;  // S, T, T^-1

  int index() const { return static_cast<int>(reps.size()); }
};

/// Breadth-first enumeration driven by the membership oracle; coset identity
/// is decided by the pairwise test r*x*(r_j)^-1 in G. Deterministic
/// (generator order S, T, T^-1). Throws IndexCapExceeded.
CosetTable coset_enumerate(const SubgroupSpec& g, int cap = 10000);

/// Schreier generators r_i * x * r_{i.x}^-1 read off the table; identity
/// entries dropped, signs normalized projectively, duplicates removed.
std::vector<IntMat2> schreier_generators(const SubgroupSpec& g,
                                         const CosetTable& table);
std::vector<IntMat2> schreier_generators(const SubgroupSpec& g,
                                         int cap = 10000);

/// [PSL2(Z) : G] (or [SL2(Z) : G] for non-projective specs).
int subgroup_index(const SubgroupSpec& g, int cap = 10000);

/// Same index and every Schreier generator of g1 contained in g2.
/// both_sides additionally checks the reverse containment.
bool subgroups_equal(const SubgroupSpec& g1, const SubgroupSpec& g2,
                     int cap = 10000, bool both_sides = false);

/// Spec of P^-1 G P for P = B/sqrt(m); requires every Schreier generator of
/// G to conjugate integrally. Throws NotConjugateIntoIntegral.
SubgroupSpec conjugate_subgroup(const SubgroupSpec& g, const Conjugator& by,
                                int cap = 10000);

}  // namespace skmono
