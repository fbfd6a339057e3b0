#include "skmono/ng.hpp"

#include "skmono/errors.hpp"

namespace skmono {

SpanModule module_span(const SubgroupSpec& g, int cap) {
  CosetTable table = coset_enumerate(g, cap);
  std::vector<IntMat2> gens = schreier_generators(g, table);
  Lattice4 lat;
  lat.insert(kId);
  for (const IntMat2& m : gens) lat.insert(m);
  bool changed = true;
  while (changed) {
    changed = false;
    auto rows = lat.basis();  // copy: inserts mutate the lattice
    for (const auto& row : rows) {
      IntMat2 v{row[0], row[1], row[2], row[3]};
      for (const IntMat2& m : gens) {
        changed |= lat.insert(m * v);
        changed |= lat.insert(v * m);
      }
    }
  }
  if (lat.rank() != 4)
    throw RankDeficient("module_span: span of subgroup has rank < 4");
  SpanModule out;
  for (int i = 0; i < 4; ++i) {
    const auto& r = lat.basis()[i];
    out.basis[i] = IntMat2{r[0], r[1], r[2], r[3]};
  }
  out.exponent = lattice_exponent(lat);
  return out;
}

std::vector<Conjugator> candidate_conjugators(const Int& n) {
  if (n < 1) throw std::invalid_argument("candidate_conjugators: n >= 1");
  std::vector<Conjugator> out;
  for (Int m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    for (const IntMat2& b : primitive_hnf_representatives(m))
      out.push_back(Conjugator{b, m});
  }
  return out;
}

bool conjugation_integral(const Conjugator& c,
                          const std::vector<IntMat2>& gens) {
  for (const IntMat2& g : gens) {
    if (!conjugates_integrally(c, g)) return false;
  }
  return true;
}

NgResult compute_ng(const SubgroupSpec& g, int cap) {
  CosetTable table = coset_enumerate(g, cap);
  std::vector<IntMat2> gens = schreier_generators(g, table);
  SpanModule span = module_span(g, cap);
  NgResult out;
  out.index = table.index();
  out.exponent = span.exponent;
  for (const Conjugator& c : candidate_conjugators(span.exponent)) {
    if (conjugation_integral(c, gens)) out.witnesses.push_back(c);
  }
  out.count = static_cast<int>(out.witnesses.size());
  return out;
}

}  // namespace skmono
