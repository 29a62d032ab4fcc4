#include "maw/hochster.hpp"

namespace maw {

std::vector<long> BigradedTable::total_by_degree() const {
  std::vector<long> td;
  for (VSet I = 0; I < (VSet(1) << n); ++I) {
    const auto& fd = entries[static_cast<std::size_t>(I)];
    const int card = vs_size(I);
    for (int p = -1; p < static_cast<int>(fd.dims.size()) - 1; ++p) {
      long d = fd.at_degree(p);
      if (d == 0) continue;
      const int total = card + 1 + p;
      if (total >= static_cast<int>(td.size())) td.resize(static_cast<std::size_t>(total) + 1, 0);
      td[static_cast<std::size_t>(total)] += d;
    }
  }
  return td;
}

long BigradedTable::total_dim() const {
  long s = 0;
  for (long d : total_by_degree()) s += d;
  return s;
}

BigradedTable bigraded_betti(const SimplicialComplex& K, FieldSpec field, int max_n) {
  validate_field(field.p);
  if (K.is_void()) throw input_error("void complex has no subset-graded table");
  if (K.n() > max_n)
    throw size_guard_error("subset-graded analysis guarded at n <= " + std::to_string(max_n));
  BigradedTable T;
  T.n = K.n();
  T.field = field;
  T.entries.resize(std::size_t(1) << T.n);
  for (VSet I = 0; I < (VSet(1) << T.n); ++I) {
    auto cc = ChainComplexData::from_complex(K.restriction(I));
    T.entries[static_cast<std::size_t>(I)] = reduced_homology_dims(cc, field);
  }
  return T;
}

BbcgCheck bbcg_dimension_check(const BigradedTable& T) {
  BbcgCheck out;
  for (VSet I = 0; I < (VSet(1) << T.n); ++I) {
    const auto& fd = T.entries[static_cast<std::size_t>(I)];
    const int card = vs_size(I);
    for (int p = -1; p < static_cast<int>(fd.dims.size()) - 1; ++p) {
      long d = fd.at_degree(p);
      if (d == 0) continue;
      // one wedge summand of the (|I|+2)-fold suspension of |K_I| per class
      const int deg = card + 2 + p;
      if (deg >= static_cast<int>(out.suspended_poincare.size()))
        out.suspended_poincare.resize(static_cast<std::size_t>(deg) + 1, 0);
      out.suspended_poincare[static_cast<std::size_t>(deg)] += d;
    }
  }
  auto td = T.total_by_degree();
  out.shifted_total.assign(td.size() + 1, 0);
  for (std::size_t d = 0; d < td.size(); ++d) out.shifted_total[d + 1] = td[d];
  while (out.shifted_total.size() > 1 && out.shifted_total.back() == 0)
    out.shifted_total.pop_back();
  while (out.suspended_poincare.size() > 1 && out.suspended_poincare.back() == 0)
    out.suspended_poincare.pop_back();
  out.ok = out.shifted_total == out.suspended_poincare;
  return out;
}

}  // namespace maw
