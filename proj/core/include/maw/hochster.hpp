#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maw/homology.hpp"

namespace maw {

// Subset-graded cohomology table: entry I holds the reduced Betti numbers of
// the full subcomplex K_I.  The I = emptyset entry is H~_{-1} of {emptyset},
// the unit in total degree 0.  Total degree of (I, p) is |I| + 1 + p.
struct BigradedTable {
  int n = 0;
  FieldSpec field;
  std::vector<FieldDims> entries;  // indexed by subset mask, size 2^n

  long dim(VSet I, int p) const { return entries[static_cast<std::size_t>(I)].at_degree(p); }
  std::vector<long> total_by_degree() const;
  long total_dim() const;
};

BigradedTable bigraded_betti(const SimplicialComplex& K, FieldSpec field, int max_n = 12);

struct BbcgCheck {
  bool ok = false;
  std::vector<long> suspended_poincare;  // coefficients of the wedge side, degree-indexed
  std::vector<long> shifted_total;       // total-degree aggregation shifted up by one
};

// Dimension identity for the suspension splitting: the wedge side built from
// t^{|I|+2} shifts must equal the degree-shifted total-degree aggregation.
BbcgCheck bbcg_dimension_check(const BigradedTable& T);

// ---- classes and cup products -----------------------------------------------------

// Cocycle representative on K_I in reduced degree p; coefficients are indexed
// by the size-(p+1) faces of K_I in ascending mask order.
template <class F>
struct HochsterClass {
  VSet I = 0;
  int p = -2;
  FVec<F> cochain;
};

template <class F>
struct CupResult {
  bool overlapping = false;  // multidegrees intersect: product is zero by multigrading
  bool zero_class = true;
  HochsterClass<F> value;
};

struct ProductWitness {
  VSet I = 0, J = 0;
  int p = 0, q = 0;
  int a_index = 0, b_index = 0;
};

struct ProductScan {
  bool all_vanish = true;
  long pairs_checked = 0;
  std::optional<ProductWitness> witness;
};

// Caches restrictions, chain complexes and cocycle bases per subset.
template <class F>
class HochsterContext {
 public:
  HochsterContext(const F& f, const SimplicialComplex& K, int max_n = 12)
      : fld_(f), K_(K), n_(K.n()) {
    if (K.n() > max_n) throw size_guard_error("subset-graded analysis guarded at n <= " +
                                              std::to_string(max_n));
    if (K.is_void()) throw input_error("void complex has no subset-graded table");
    comps_.resize(std::size_t(1) << n_);
  }

  const F& field() const { return fld_; }
  const SimplicialComplex& K() const { return K_; }
  int n() const { return n_; }

  struct Component {
    SimplicialComplex KI;
    ChainComplexData cc;
    std::vector<std::vector<VSet>> faces;       // by size, local masks ascending
    std::vector<std::map<VSet, int>> face_idx;  // local mask -> position
  };

  const Component& component(VSet I) {
    auto& slot = comps_[static_cast<std::size_t>(I)];
    if (!slot) {
      auto c = std::make_unique<Component>();
      c->KI = K_.restriction(I);
      c->cc = ChainComplexData::from_complex(c->KI);
      c->faces = c->KI.faces_by_size();
      c->face_idx.resize(c->faces.size());
      for (std::size_t s = 0; s < c->faces.size(); ++s)
        for (int i = 0; i < static_cast<int>(c->faces[s].size()); ++i)
          c->face_idx[s][c->faces[s][static_cast<std::size_t>(i)]] = i;
      slot = std::move(c);
    }
    return *slot;
  }

  // Ambient mask (subset of I) to the local mask inside K_I.
  VSet localize(VSet I, VSet ambient) const { return vs_localize(I, ambient); }

  const std::vector<FVec<F>>& basis(VSet I, int p) {
    auto key = std::make_pair(I, p);
    auto it = basis_cache_.find(key);
    if (it != basis_cache_.end()) return it->second;
    const auto& comp = component(I);
    auto reps = cocycle_basis(fld_, comp.cc, p);
    return basis_cache_.emplace(key, std::move(reps)).first->second;
  }

  // All (p, count) pairs with nonzero cohomology in multidegree I.
  std::vector<std::pair<int, int>> class_degrees(VSet I) {
    const auto& comp = component(I);
    std::vector<std::pair<int, int>> out;
    for (int p = -1; p <= comp.cc.top_degree(); ++p) {
      int c = static_cast<int>(basis(I, p).size());
      if (c > 0) out.push_back({p, c});
    }
    return out;
  }

  bool is_zero_class(const HochsterClass<F>& c) {
    const auto& comp = component(c.I);
    if (comp.cc.dim(c.p) == 0) return true;
    Subspace<F> cob = coboundary_space(fld_, comp.cc, c.p);
    return cob.contains(c.cochain);
  }

  CupResult<F> cup_product(const HochsterClass<F>& a, const HochsterClass<F>& b);

 private:
  const F fld_;
  SimplicialComplex K_;
  int n_;
  std::vector<std::unique_ptr<Component>> comps_;
  std::map<std::pair<VSet, int>, std::vector<FVec<F>>> basis_cache_;
};

// Cochain-level product: on a size-(p+q+2) face tau of K_{I u J} the value is
// shuffle_sign(tau&I, tau&J) * a(tau&I) * b(tau&J) when the two parts have the
// right sizes, zero otherwise.  Overlapping multidegrees give zero by the
// multigrading and are only flagged.
template <class F>
CupResult<F> HochsterContext<F>::cup_product(const HochsterClass<F>& a,
                                             const HochsterClass<F>& b) {
  CupResult<F> out;
  if (a.I & b.I) {
    out.overlapping = true;
    return out;
  }
  const VSet IJ = a.I | b.I;
  const auto& comp = component(IJ);
  const auto& compA = component(a.I);
  const auto& compB = component(b.I);
  const int deg = a.p + b.p + 1;
  out.value.I = IJ;
  out.value.p = deg;
  const std::size_t sz = static_cast<std::size_t>(deg) + 1;
  if (sz >= comp.faces.size()) {
    out.value.cochain.clear();
    out.zero_class = true;
    return out;
  }
  const auto& taus = comp.faces[sz];
  FVec<F> c(taus.size(), fld_.zero());
  bool any = false;
  for (std::size_t t = 0; t < taus.size(); ++t) {
    VSet tau = 0;  // ambient mask of the face
    for (int v : vs_elements(taus[t])) tau |= VSet(1) << (comp.KI.labels()[static_cast<std::size_t>(v)] - 1);
    const VSet ta = tau & a.I, tb = tau & b.I;
    if (vs_size(ta) != a.p + 1 || vs_size(tb) != b.p + 1) continue;
    const VSet la = localize(a.I, ta), lb = localize(b.I, tb);
    auto ia = compA.face_idx[static_cast<std::size_t>(a.p) + 1].find(la);
    auto ib = compB.face_idx[static_cast<std::size_t>(b.p) + 1].find(lb);
    if (ia == compA.face_idx[static_cast<std::size_t>(a.p) + 1].end() ||
        ib == compB.face_idx[static_cast<std::size_t>(b.p) + 1].end())
      throw std::logic_error("restriction face index out of sync");
    auto v = fld_.mul(a.cochain[static_cast<std::size_t>(ia->second)],
                      b.cochain[static_cast<std::size_t>(ib->second)]);
    if (shuffle_sign(ta, tb) < 0) v = fld_.neg(v);
    if (!fld_.is_zero(v)) any = true;
    c[t] = v;
  }
  out.value.cochain = std::move(c);
  if (any) {
    // the product of cocycles must again be a cocycle
    const auto& cc = comp.cc;
    if (deg + 1 <= cc.top_degree()) {
      auto delta = coboundary_matrix(fld_, cc, deg);
      auto img = delta.apply(out.value.cochain);
      for (const auto& e : img)
        if (!fld_.is_zero(e)) throw std::logic_error("cup product is not a cocycle");
    }
  }
  out.zero_class = is_zero_class(out.value);
  return out;
}

// Scans every disjoint pair of multidegrees carrying classes; stops at the
// first product that is nonzero in cohomology.
template <class F>
ProductScan all_products_vanish(HochsterContext<F>& ctx) {
  ProductScan scan;
  const int n = ctx.n();
  const VSet full = vs_full(n);
  struct Entry {
    VSet I;
    int p;
    int count;
  };
  std::vector<Entry> entries;
  for (VSet I = 1; I <= full; ++I)
    for (auto [p, c] : ctx.class_degrees(I)) entries.push_back({I, p, c});
  for (const auto& ea : entries)
    for (const auto& eb : entries) {
      if (ea.I & eb.I) continue;
      for (int i = 0; i < ea.count; ++i)
        for (int j = 0; j < eb.count; ++j) {
          HochsterClass<F> a{ea.I, ea.p, ctx.basis(ea.I, ea.p)[static_cast<std::size_t>(i)]};
          HochsterClass<F> b{eb.I, eb.p, ctx.basis(eb.I, eb.p)[static_cast<std::size_t>(j)]};
          auto r = ctx.cup_product(a, b);
          ++scan.pairs_checked;
          if (!r.overlapping && !r.zero_class) {
            scan.all_vanish = false;
            scan.witness = ProductWitness{ea.I, eb.I, ea.p, eb.p, i, j};
            return scan;
          }
        }
    }
  return scan;
}

}  // namespace maw
