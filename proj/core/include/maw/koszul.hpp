#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maw/hochster.hpp"
#include "maw/homology.hpp"
#include "maw/rng.hpp"

namespace maw {

// Exterior-times-face-ring model with basis u_J v_sigma, J disjoint from
// sigma, sigma a face.  Everything is graded by the multidegree I = J u sigma;
// the differential raises the face size by one inside a fixed I, so each
// multidegree component is a finite complex handled with dense field linear
// algebra.  Total degree of u_J v_sigma is |J| + 2|sigma| = |I| + |sigma|.
template <class F>
class KoszulModel {
 public:
  KoszulModel(const F& f, const SimplicialComplex& K, int max_n = 12)
      : fld_(f), K_(K), n_(K.n()) {
    if (K.is_void()) throw input_error("void complex has no Koszul model");
    if (K.n() > max_n)
      throw size_guard_error("Koszul model guarded at n <= " + std::to_string(max_n));
    comps_.resize(std::size_t(1) << n_);
  }

  const F& field() const { return fld_; }
  const SimplicialComplex& K() const { return K_; }
  int n() const { return n_; }

  struct Component {
    std::vector<std::vector<VSet>> sigmas;   // by face size, ambient masks ascending
    std::vector<std::map<VSet, int>> idx;    // sigma -> basis position
    std::vector<FMat<F>> d;                  // d[s]: level s -> level s+1
    std::vector<Subspace<F>> cob;            // image of d[s-1] inside level s
    std::vector<std::vector<FVec<F>>> reps;  // cohomology representatives at level s
    long total_h = 0;
    int levels() const { return static_cast<int>(sigmas.size()); }
    long dim(int s) const {
      return (s >= 0 && s < levels()) ? static_cast<long>(sigmas[static_cast<std::size_t>(s)].size()) : 0;
    }
    long hdim(int s) const {
      return (s >= 0 && s < levels()) ? static_cast<long>(reps[static_cast<std::size_t>(s)].size()) : 0;
    }
  };

  // Cochain in one multidegree; v is a coefficient vector over sigmas[s].
  struct Elem {
    VSet I = 0;
    int s = 0;
    FVec<F> v;
  };

  const Component& component(VSet I);

  Elem zero_elem(VSet I, int s) {
    const auto& c = component(I);
    return Elem{I, s, FVec<F>(static_cast<std::size_t>(c.dim(s)), fld_.zero())};
  }

  bool is_zero(const Elem& e) const {
    for (const auto& x : e.v)
      if (!fld_.is_zero(x)) return false;
    return true;
  }

  Elem apply_d(const Elem& e) {
    const auto& c = component(e.I);
    Elem out = zero_elem(e.I, e.s + 1);
    if (e.s < c.levels() - 1 && c.dim(e.s) > 0)
      out.v = c.d[static_cast<std::size_t>(e.s)].apply(e.v);
    return out;
  }

  bool is_cocycle(const Elem& e) { return is_zero(apply_d(e)); }

  bool is_coboundary(const Elem& e) {
    if (is_zero(e)) return true;
    auto& c = mutable_component(e.I);
    return c.cob[static_cast<std::size_t>(e.s)].contains(e.v);
  }

  // Multiplication is zero across overlapping multidegrees and drops terms
  // whose merged face is not in the complex; the sign is the exterior shuffle
  // of the two u-blocks.
  Elem product(const Elem& a, const Elem& b) {
    if (a.I & b.I) return zero_elem(0, 0);
    const VSet IJ = a.I | b.I;
    const auto& ca = component(a.I);
    const auto& cb = component(b.I);
    Elem out = zero_elem(IJ, a.s + b.s);
    const auto& cab = component(IJ);
    if (a.s + b.s >= cab.levels()) return out;
    auto& idx = comps_[static_cast<std::size_t>(IJ)]->idx[static_cast<std::size_t>(a.s + b.s)];
    for (std::size_t i = 0; i < a.v.size(); ++i) {
      if (fld_.is_zero(a.v[i])) continue;
      const VSet sa = ca.sigmas[static_cast<std::size_t>(a.s)][i];
      const VSet Ja = a.I & ~sa;
      for (std::size_t j = 0; j < b.v.size(); ++j) {
        if (fld_.is_zero(b.v[j])) continue;
        const VSet sb = cb.sigmas[static_cast<std::size_t>(b.s)][j];
        auto it = idx.find(sa | sb);
        if (it == idx.end()) continue;  // merged face not in K
        const VSet Jb = b.I & ~sb;
        auto term = fld_.mul(a.v[i], b.v[j]);
        if (shuffle_sign(Ja, Jb) < 0) term = fld_.neg(term);
        auto& slot = out.v[static_cast<std::size_t>(it->second)];
        slot = fld_.add(slot, term);
      }
    }
    return out;
  }

  // Particular solution of d x = rhs at level s-1, plus an optional random
  // kernel perturbation so bounding cochains can be re-drawn.
  std::optional<Elem> solve_d(VSet I, int s, const FVec<F>& rhs, Rng* rng = nullptr) {
    auto& c = mutable_component(I);
    Elem x = zero_elem(I, s - 1);
    bool rhs_zero = true;
    for (const auto& e : rhs)
      if (!fld_.is_zero(e)) {
        rhs_zero = false;
        break;
      }
    if (!rhs_zero) {
      if (s - 1 < 0 || c.dim(s - 1) == 0) return std::nullopt;
      auto sol = c.d[static_cast<std::size_t>(s - 1)].solve(rhs);
      if (!sol) return std::nullopt;
      x.v = *sol;
    }
    if (rng && s - 1 >= 0 && c.dim(s - 1) > 0 && s - 1 < c.levels() - 1) {
      auto ker = c.d[static_cast<std::size_t>(s - 1)].kernel_basis();
      for (const auto& k : ker) {
        long coef = static_cast<long>(rng->next_below(5)) - 2;
        if (coef == 0) continue;
        auto fc = fld_.from_int(coef);
        for (std::size_t t = 0; t < x.v.size(); ++t)
          x.v[t] = fld_.add(x.v[t], fld_.mul(fc, k[t]));
      }
    }
    return x;
  }

  // Exhaustive graded Leibniz check over basis pairs; meant for small n.
  void verify_leibniz() const;

  std::vector<long> cohomology_total_by_degree();

 private:
  Component& mutable_component(VSet I) {
    component(I);
    return *comps_[static_cast<std::size_t>(I)];
  }

  void build_component(VSet I, Component& c);

  const F fld_;
  SimplicialComplex K_;
  int n_;
  std::vector<std::unique_ptr<Component>> comps_;
};

template <class F>
const typename KoszulModel<F>::Component& KoszulModel<F>::component(VSet I) {
  auto& slot = comps_[static_cast<std::size_t>(I)];
  if (!slot) {
    auto c = std::make_unique<Component>();
    build_component(I, *c);
    slot = std::move(c);
  }
  return *slot;
}

template <class F>
void KoszulModel<F>::build_component(VSet I, Component& c) {
  const int card = vs_size(I);
  c.sigmas.assign(static_cast<std::size_t>(card) + 1, {});
  for (VSet s : vs_subsets(I))
    if (K_.has_face(s)) c.sigmas[static_cast<std::size_t>(vs_size(s))].push_back(s);
  c.idx.resize(c.sigmas.size());
  for (std::size_t s = 0; s < c.sigmas.size(); ++s) {
    std::sort(c.sigmas[s].begin(), c.sigmas[s].end());
    for (int i = 0; i < static_cast<int>(c.sigmas[s].size()); ++i)
      c.idx[s][c.sigmas[s][static_cast<std::size_t>(i)]] = i;
  }
  const int L = c.levels();
  c.d.clear();
  for (int s = 0; s + 1 < L; ++s) {
    FMat<F> D(fld_, c.dim(s + 1), c.dim(s));
    for (int col = 0; col < static_cast<int>(c.dim(s)); ++col) {
      const VSet sigma = c.sigmas[static_cast<std::size_t>(s)][static_cast<std::size_t>(col)];
      const VSet J = I & ~sigma;
      for (int i : vs_elements(J)) {
        const VSet tau = sigma | (VSet(1) << i);
        auto it = c.idx[static_cast<std::size_t>(s) + 1].find(tau);
        if (it == c.idx[static_cast<std::size_t>(s) + 1].end()) continue;
        auto val = fld_.from_int(vs_rank(J, i) % 2 == 0 ? 1 : -1);
        D.at(it->second, col) = fld_.add(D.at(it->second, col), val);
      }
    }
    c.d.push_back(std::move(D));
  }
  // d is a differential on every component
  for (int s = 0; s + 2 < L; ++s) {
    const auto& D1 = c.d[static_cast<std::size_t>(s)];
    const auto& D2 = c.d[static_cast<std::size_t>(s) + 1];
    for (int col = 0; col < D1.cols; ++col) {
      FVec<F> v(static_cast<std::size_t>(D1.rows), fld_.zero());
      for (int r = 0; r < D1.rows; ++r) v[static_cast<std::size_t>(r)] = D1.at(r, col);
      auto w = D2.apply(v);
      for (const auto& e : w)
        if (!fld_.is_zero(e)) throw std::logic_error("d^2 != 0 in Koszul component");
    }
  }
  c.cob.clear();
  c.reps.clear();
  c.total_h = 0;
  for (int s = 0; s < L; ++s) {
    Subspace<F> image(fld_, static_cast<int>(c.dim(s)));
    if (s > 0 && c.dim(s - 1) > 0) image.insert_all(c.d[static_cast<std::size_t>(s) - 1].columns());
    std::vector<FVec<F>> cocycles;
    if (s + 1 < L && c.dim(s) > 0)
      cocycles = c.d[static_cast<std::size_t>(s)].kernel_basis();
    else if (c.dim(s) > 0)
      cocycles = FMat<F>::identity_columns(fld_, static_cast<int>(c.dim(s)));
    std::vector<FVec<F>> reps;
    Subspace<F> seen = image;
    for (auto& z : cocycles)
      if (seen.insert(z)) reps.push_back(z);
    c.total_h += static_cast<long>(reps.size());
    c.cob.push_back(std::move(image));
    c.reps.push_back(std::move(reps));
  }
}

template <class F>
void KoszulModel<F>::verify_leibniz() const {
  auto* self = const_cast<KoszulModel<F>*>(this);
  const VSet full = vs_full(n_);
  struct B {
    VSet I;
    int s;
    int i;
  };
  std::vector<B> basis;
  for (VSet I = 0; I <= full; ++I) {
    const auto& c = self->component(I);
    for (int s = 0; s < c.levels(); ++s)
      for (int i = 0; i < c.dim(s); ++i) basis.push_back({I, s, i});
  }
  for (const auto& xa : basis)
    for (const auto& xb : basis) {
      if (xa.I & xb.I) continue;  // product vanishes by multigrading, both sides zero
      Elem a = self->zero_elem(xa.I, xa.s);
      a.v[static_cast<std::size_t>(xa.i)] = fld_.one();
      Elem b = self->zero_elem(xb.I, xb.s);
      b.v[static_cast<std::size_t>(xb.i)] = fld_.one();
      Elem ab = self->product(a, b);
      Elem lhs = self->apply_d(ab);
      Elem rhs1 = self->product(self->apply_d(a), b);
      Elem rhs2 = self->product(a, self->apply_d(b));
      const int deg_a = vs_size(xa.I) + xa.s;
      if (deg_a % 2 != 0)
        for (auto& e : rhs2.v) e = fld_.neg(e);
      Elem rhs = rhs1;
      if (rhs.v.size() != rhs2.v.size() || rhs.v.size() != lhs.v.size())
        throw std::logic_error("Leibniz check level mismatch");
      for (std::size_t t = 0; t < rhs.v.size(); ++t) {
        auto want = fld_.add(rhs.v[t], rhs2.v[t]);
        if (!(fld_.sub(lhs.v[t], want) == fld_.zero()))
          throw std::logic_error("Leibniz rule fails");
      }
    }
}

template <class F>
std::vector<long> KoszulModel<F>::cohomology_total_by_degree() {
  std::vector<long> td;
  const VSet full = vs_full(n_);
  for (VSet I = 0; I <= full; ++I) {
    const auto& c = component(I);
    const int card = vs_size(I);
    for (int s = 0; s < c.levels(); ++s) {
      long h = c.hdim(s);
      if (h == 0) continue;
      const int total = card + s;
      if (total >= static_cast<int>(td.size())) td.resize(static_cast<std::size_t>(total) + 1, 0);
      td[static_cast<std::size_t>(total)] += h;
    }
  }
  return td;
}

// ---- triple Massey products --------------------------------------------------------

enum class MasseyVerdict { Vanishes, Nontrivial, Undefined };

struct MasseyOutcome {
  MasseyVerdict verdict = MasseyVerdict::Undefined;
  VSet I_a = 0, I_b = 0, I_c = 0;
  int s_a = 0, s_b = 0, s_c = 0;
  int total_degree = 0;      // degree of the bracket when defined
  long indeterminacy_dim = 0;
  bool bracket_zero = false;
};

// Representative a*y - (-1)^|a| x*c with d x = a*b, d y = b*c; compared against
// the coboundaries plus the degreewise indeterminacy a*H + H*c, all inside the
// single multidegree component that can carry the bracket.
template <class F>
MasseyOutcome triple_massey(KoszulModel<F>& M, const typename KoszulModel<F>::Elem& a,
                            const typename KoszulModel<F>::Elem& b,
                            const typename KoszulModel<F>::Elem& c, Rng* rng = nullptr) {
  const auto& fld = M.field();
  MasseyOutcome out;
  out.I_a = a.I;
  out.I_b = b.I;
  out.I_c = c.I;
  out.s_a = a.s;
  out.s_b = b.s;
  out.s_c = c.s;
  if (!M.is_cocycle(a) || !M.is_cocycle(b) || !M.is_cocycle(c))
    throw input_error("Massey arguments must be cocycles");
  auto ab = M.product(a, b);
  auto bc = M.product(b, c);
  const VSet Iab = a.I | b.I, Ibc = b.I | c.I;
  const bool ab_overlap = (a.I & b.I) != 0, bc_overlap = (b.I & c.I) != 0;
  if ((!ab_overlap && !M.is_coboundary(ab)) || (!bc_overlap && !M.is_coboundary(bc))) {
    out.verdict = MasseyVerdict::Undefined;
    return out;
  }
  typename KoszulModel<F>::Elem x =
      ab_overlap ? M.zero_elem(Iab, a.s + b.s - 1)
                 : *M.solve_d(Iab, a.s + b.s, ab.v, rng);
  typename KoszulModel<F>::Elem y =
      bc_overlap ? M.zero_elem(Ibc, b.s + c.s - 1)
                 : *M.solve_d(Ibc, b.s + c.s, bc.v, rng);
  x.I = Iab;
  y.I = Ibc;
  auto t1 = M.product(a, y);
  auto t2 = M.product(x, c);
  const VSet Iabc = a.I | b.I | c.I;
  const int s_rep = a.s + b.s + c.s - 1;
  auto rep = M.zero_elem(Iabc, s_rep);
  const int deg_a = vs_size(a.I) + a.s;
  const bool flip = deg_a % 2 != 0;
  auto add_into = [&](const typename KoszulModel<F>::Elem& e, bool negate) {
    if (e.v.empty()) return;
    if (e.I != Iabc || e.s != s_rep) {
      if (M.is_zero(e)) return;
      throw std::logic_error("Massey representative lands in the wrong component");
    }
    for (std::size_t t = 0; t < rep.v.size(); ++t)
      rep.v[t] = negate ? fld.sub(rep.v[t], e.v[t]) : fld.add(rep.v[t], e.v[t]);
  };
  add_into(t1, false);
  add_into(t2, !flip);  // minus (-1)^{|a|} x*c
  if (!M.is_cocycle(rep)) throw std::logic_error("Massey representative is not a cocycle");
  out.total_degree = vs_size(Iabc) + s_rep;
  // indeterminacy: coboundaries, a * H(Ibc), H(Iab) * c at the matching level
  const auto& comp = M.component(Iabc);
  Subspace<F> span(fld, static_cast<int>(comp.dim(s_rep)));
  if (s_rep > 0 && comp.dim(s_rep - 1) > 0) {
    const auto& D = comp.d[static_cast<std::size_t>(s_rep) - 1];
    span.insert_all(D.columns());
  }
  const long cob_rank = span.rank();
  if ((a.I & Ibc) == 0) {
    const auto& cbc = M.component(Ibc);
    const int sy = b.s + c.s - 1;
    if (sy >= 0 && sy < cbc.levels())
      for (const auto& h : cbc.reps[static_cast<std::size_t>(sy)]) {
        typename KoszulModel<F>::Elem eh{Ibc, sy, h};
        auto prod = M.product(a, eh);
        if (prod.I == Iabc && prod.s == s_rep && !prod.v.empty()) span.insert(prod.v);
      }
  }
  if ((c.I & Iab) == 0) {
    const auto& cab = M.component(Iab);
    const int sx = a.s + b.s - 1;
    if (sx >= 0 && sx < cab.levels())
      for (const auto& h : cab.reps[static_cast<std::size_t>(sx)]) {
        typename KoszulModel<F>::Elem eh{Iab, sx, h};
        auto prod = M.product(eh, c);
        if (prod.I == Iabc && prod.s == s_rep && !prod.v.empty()) span.insert(prod.v);
      }
  }
  out.indeterminacy_dim = span.rank() - cob_rank;
  out.bracket_zero = M.is_zero(rep) || span.contains(rep.v);
  out.verdict = out.bracket_zero ? MasseyVerdict::Vanishes : MasseyVerdict::Nontrivial;
  return out;
}

// ---- route comparison ----------------------------------------------------------------

struct CrossValidation {
  bool dims_match = false;
  bool totals_match = false;
  bool products_agree = false;
  bool ok = false;
  long classes = 0;
  std::string detail;  // first mismatch, empty when ok
};

// Compares the subset-graded table against the model component dimensions
// (H~^{s-1}(K_I) against level s of component I), the two total-degree
// aggregations, and the two product-vanishing scans.
template <class F>
CrossValidation cross_validate_t(const F& fld, const SimplicialComplex& K, int max_n = 12) {
  CrossValidation cv;
  HochsterContext<F> hc(fld, K, max_n);
  KoszulModel<F> km(fld, K, max_n);
  auto T = bigraded_betti(K, fld.spec(), max_n);
  cv.dims_match = true;
  const VSet full = vs_full(K.n());
  for (VSet I = 0; I <= full && cv.dims_match; ++I) {
    const auto& c = km.component(I);
    const int card = vs_size(I);
    for (int s = 0; s <= card; ++s) {
      long koszul_dim = c.hdim(s);
      long hochster_dim = T.dim(I, s - 1);
      if (koszul_dim != hochster_dim) {
        cv.dims_match = false;
        cv.detail = "component dim mismatch at I=" + std::to_string(static_cast<unsigned long long>(I)) +
                    " level " + std::to_string(s) + ": " + std::to_string(koszul_dim) + " vs " +
                    std::to_string(hochster_dim);
        break;
      }
      cv.classes += koszul_dim;
    }
  }
  auto t1 = km.cohomology_total_by_degree();
  auto t2 = T.total_by_degree();
  while (t1.size() > t2.size()) {
    if (t1.back() != 0) break;
    t1.pop_back();
  }
  while (t2.size() > t1.size()) {
    if (t2.back() != 0) break;
    t2.pop_back();
  }
  cv.totals_match = t1 == t2;
  if (!cv.totals_match && cv.detail.empty()) cv.detail = "total degree aggregations differ";
  auto scan = all_products_vanish(hc);
  bool koszul_vanish = true;
  {
    struct E {
      VSet I;
      int s;
      std::size_t i;
    };
    std::vector<E> cls;
    for (VSet I = 1; I <= full; ++I) {
      const auto& c = km.component(I);
      for (int s = 0; s < c.levels(); ++s)
        for (std::size_t i = 0; i < c.reps[static_cast<std::size_t>(s)].size(); ++i)
          cls.push_back({I, s, i});
    }
    for (const auto& ea : cls) {
      for (const auto& eb : cls) {
        if (ea.I & eb.I) continue;
        typename KoszulModel<F>::Elem a{ea.I, ea.s,
                                        km.component(ea.I).reps[static_cast<std::size_t>(ea.s)][ea.i]};
        typename KoszulModel<F>::Elem b{eb.I, eb.s,
                                        km.component(eb.I).reps[static_cast<std::size_t>(eb.s)][eb.i]};
        auto pr = km.product(a, b);
        if (!km.is_coboundary(pr)) {
          koszul_vanish = false;
          break;
        }
      }
      if (!koszul_vanish) break;
    }
  }
  cv.products_agree = scan.all_vanish == koszul_vanish;
  if (!cv.products_agree && cv.detail.empty()) cv.detail = "product scans disagree between routes";
  cv.ok = cv.dims_match && cv.totals_match && cv.products_agree;
  return cv;
}

CrossValidation cross_validate(const SimplicialComplex& K, FieldSpec field, int max_n = 12);

const char* massey_verdict_name(MasseyVerdict v);

}  // namespace maw
