#include "skmono/cosets.hpp"

#include <deque>
#include <set>

#include "skmono/errors.hpp"

namespace skmono {

CosetTable coset_enumerate(const SubgroupSpec& g, int cap) {
  static const IntMat2 kGens[3] = {kS, kT, kTinv};
  CosetTable table;
  table.reps.push_back(kId);
  std::deque<int> queue{0};
  for (auto& perm : table.action) perm.push_back(-1);
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int gi = 0; gi < 3; ++gi) {
      IntMat2 cand = table.reps[i] * kGens[gi];
      int found = -1;
      for (std::size_t j = 0; j < table.reps.size(); ++j) {
        if (g.contains(cand * adjugate(table.reps[j]))) {
          found = static_cast<int>(j);
          break;
        }
      }
      if (found < 0) {
        if (static_cast<int>(table.reps.size()) >= cap)
          throw IndexCapExceeded("coset enumeration cap exceeded (" +
                                 std::to_string(cap) + ")");
        table.reps.push_back(cand);
        for (auto& perm : table.action) perm.push_back(-1);
        found = static_cast<int>(table.reps.size()) - 1;
        queue.push_back(found);
      }
      table.action[gi][i] = found;
    }
  }
  return table;
}

std::vector<IntMat2> schreier_generators(const SubgroupSpec& g,
                                         const CosetTable& table) {
  std::set<IntMat2> seen;
  std::vector<IntMat2> out;
  for (int gi = 0; gi < 2; ++gi) {  // S and T suffice
    const IntMat2 gen = gi == 0 ? kS : kT;
    for (std::size_t i = 0; i < table.reps.size(); ++i) {
      int j = table.action[gi][i];
      IntMat2 el = table.reps[i] * gen * adjugate(table.reps[j]);
      if (g.projective()) el = normalize_sign(el);
      if (el == kId || (g.projective() && el == -kId)) continue;
      if (seen.insert(el).second) out.push_back(el);
    }
  }
  return out;
}

std::vector<IntMat2> schreier_generators(const SubgroupSpec& g, int cap) {
  return schreier_generators(g, coset_enumerate(g, cap));
}

int subgroup_index(const SubgroupSpec& g, int cap) {
  return coset_enumerate(g, cap).index();
}

bool subgroups_equal(const SubgroupSpec& g1, const SubgroupSpec& g2, int cap,
                     bool both_sides) {
  CosetTable t1 = coset_enumerate(g1, cap);
  CosetTable t2 = coset_enumerate(g2, cap);
  if (t1.index() != t2.index()) return false;
  for (const IntMat2& s : schreier_generators(g1, t1)) {
    if (!g2.contains(s)) return false;
  }
  if (both_sides) {
    for (const IntMat2& s : schreier_generators(g2, t2)) {
      if (!g1.contains(s)) return false;
    }
  }
  return true;
}

SubgroupSpec conjugate_subgroup(const SubgroupSpec& g, const Conjugator& by,
                                int cap) {
  for (const IntMat2& s : schreier_generators(g, cap)) {
    if (!conjugates_integrally(by, s))
      throw NotConjugateIntoIntegral("generator " + format_intmat2(s) +
                                     " does not conjugate into SL2(Z) under " +
                                     format_conjugator(by));
  }
  return SubgroupSpec::conjugated(g, by);
}

}  // namespace skmono
