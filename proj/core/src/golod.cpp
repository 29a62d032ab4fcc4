#include "maw/golod.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "maw/koszul.hpp"

namespace maw {

namespace {

void require_no_ghosts(const SimplicialComplex& K) {
  for (int v = 0; v < K.n(); ++v)
    if (!K.has_face(VSet(1) << v))
      throw input_error("vertex " + std::to_string(v + 1) + " is not a face");
}

template <class F>
GolodVerdict classify_golod_t(const F& fld, const SimplicialComplex& K, int max_n) {
  GolodVerdict out;
  out.field = fld.spec();
  HochsterContext<F> hc(fld, K, max_n);
  auto scan = all_products_vanish(hc);
  out.products_vanish = scan.all_vanish;
  out.pairs_checked = scan.pairs_checked;

  KoszulModel<F> km(fld, K, max_n);
  struct Cls {
    VSet I;
    int s;
    std::size_t i;
  };
  std::vector<Cls> classes;
  const VSet full = vs_full(K.n());
  for (VSet I = 1; I <= full; ++I) {
    const auto& c = km.component(I);
    for (int s = 0; s < c.levels(); ++s)
      for (std::size_t i = 0; i < c.reps[static_cast<std::size_t>(s)].size(); ++i)
        classes.push_back({I, s, i});
  }
  out.classes = static_cast<long>(classes.size());

  if (!out.products_vanish) {
    std::ostringstream w;
    w << "nonzero product of classes in multidegrees " << scan.witness->I << " and "
      << scan.witness->J;
    out.witness = w.str();
    out.label = "not-Golod";
    return out;
  }

  bool all_vanish = true;
  auto elem_of = [&](const Cls& c) {
    typename KoszulModel<F>::Elem e{c.I, c.s,
                                    km.component(c.I).reps[static_cast<std::size_t>(c.s)][c.i]};
    return e;
  };
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      if (a.I & b.I) continue;
      for (const auto& c : classes) {
        if ((a.I | b.I) & c.I) continue;
        auto res = triple_massey(km, elem_of(a), elem_of(b), elem_of(c));
        ++out.triples_checked;
        if (res.verdict == MasseyVerdict::Nontrivial) {
          all_vanish = false;
          std::ostringstream w;
          w << "nontrivial triple bracket in multidegrees " << a.I << ", " << b.I << ", "
            << c.I;
          out.witness = w.str();
          break;
        }
      }
      if (!all_vanish) break;
    }
    if (!all_vanish) break;
  }
  out.massey_all_vanish = all_vanish;
  out.label = all_vanish ? "Golod-up-to-triple-Massey" : "not-Golod";
  return out;
}

template <class F>
ExtractibleReport extractible_necessary_t(const F& fld, const SimplicialComplex& K) {
  ExtractibleReport out;
  out.field = fld.spec();
  auto cc = ChainComplexData::from_complex(K);
  out.homology_dims = reduced_homology_dims(cc, fld.spec()).dims;
  auto faces = K.faces_by_size();
  std::vector<std::map<VSet, int>> idx(faces.size());
  for (std::size_t s = 0; s < faces.size(); ++s)
    for (int i = 0; i < static_cast<int>(faces[s].size()); ++i)
      idx[s][faces[s][static_cast<std::size_t>(i)]] = i;

  struct Deletion {
    VSet keep;
    SimplicialComplex D;
    ChainComplexData cc;
    std::vector<std::vector<VSet>> faces;
  };
  std::vector<Deletion> dels;
  for (int v = 0; v < K.n(); ++v) {
    Deletion d;
    d.keep = vs_full(K.n()) & ~(VSet(1) << v);
    d.D = K.restriction(d.keep);
    d.cc = ChainComplexData::from_complex(d.D);
    d.faces = d.D.faces_by_size();
    dels.push_back(std::move(d));
  }

  out.passes = true;
  for (int d = -1; d <= cc.top_degree(); ++d) {
    auto reps = cycle_basis_reps(fld, cc, d);
    if (reps.empty()) continue;
    const std::size_t sz = static_cast<std::size_t>(d + 1);
    Subspace<F> span(fld, static_cast<int>(cc.dim(d)));
    if (d + 1 <= cc.top_degree())
      span.insert_all(boundary_matrix(fld, cc, d + 1).columns());
    for (const auto& del : dels) {
      if (d > del.cc.top_degree()) continue;
      auto zreps = cycle_basis_reps(fld, del.cc, d);
      if (zreps.empty()) continue;
      // push each deletion cycle into the ambient chain group
      std::vector<int> amb(del.faces[sz].size());
      for (std::size_t i = 0; i < del.faces[sz].size(); ++i) {
        VSet a = vs_spread(del.keep, del.faces[sz][i]);
        amb[i] = idx[sz].at(a);
      }
      for (const auto& z : zreps) {
        FVec<F> w(static_cast<std::size_t>(cc.dim(d)), fld.zero());
        for (std::size_t i = 0; i < z.size(); ++i) w[static_cast<std::size_t>(amb[i])] = z[i];
        span.insert(std::move(w));
      }
    }
    for (const auto& z : reps)
      if (!span.contains(z)) {
        out.passes = false;
        out.failing_degrees.push_back(d);
        break;
      }
  }
  return out;
}

}  // namespace

GolodVerdict classify_golod(const SimplicialComplex& K, FieldSpec field, int max_n) {
  validate_field(field.p);
  if (K.is_void() || K.n() == 0) throw input_error("need a complex with vertices");
  require_no_ghosts(K);
  return dispatch_field(field,
                        [&](auto fld) { return classify_golod_t(fld, K, max_n); });
}

ExtractibleReport extractible_necessary(const SimplicialComplex& K, FieldSpec field) {
  validate_field(field.p);
  if (K.is_void() || K.n() == 0) throw input_error("need a complex with vertices");
  return dispatch_field(field,
                        [&](auto fld) { return extractible_necessary_t(fld, K); });
}

std::string PoincareSeries::to_string() const {
  std::ostringstream os;
  os << "(1+t)^" << n << " / (";
  bool first = true;
  for (std::size_t k = 0; k < denominator.size(); ++k) {
    long long c = denominator[k];
    if (c == 0) continue;
    if (first) {
      os << c;
      if (k > 0) os << "*t^" << k;
      first = false;
    } else {
      os << (c > 0 ? " + " : " - ");
      os << std::abs(c);
      if (k > 0) os << "*t^" << k;
    }
  }
  os << ")";
  return os.str();
}

PoincareSeries golod_poincare_series(const SimplicialComplex& K, FieldSpec field,
                                     int max_n) {
  auto T = bigraded_betti(K, field, max_n);
  PoincareSeries out;
  out.n = T.n;
  out.numerator.assign(static_cast<std::size_t>(T.n) + 1, 0);
  long long binom = 1;
  for (int k = 0; k <= T.n; ++k) {
    out.numerator[static_cast<std::size_t>(k)] = binom;
    binom = binom * (T.n - k) / (k + 1);
  }
  out.denominator.assign(1, 1);
  for (VSet I = 1; I < (VSet(1) << T.n); ++I) {
    const auto& fd = T.entries[static_cast<std::size_t>(I)];
    const int card = vs_size(I);
    for (int p = -1; p < static_cast<int>(fd.dims.size()) - 1; ++p) {
      long dim = fd.at_degree(p);
      if (dim == 0) continue;
      const int e = card - p;
      if (e >= static_cast<int>(out.denominator.size()))
        out.denominator.resize(static_cast<std::size_t>(e) + 1, 0);
      out.denominator[static_cast<std::size_t>(e)] -= dim;
    }
  }
  return out;
}

// ---- catalog ------------------------------------------------------------------------

namespace {

// Families of subsets are bitmasks indexed by the subset's own mask value;
// fits in 64 bits for n <= 6.
using Family = std::uint64_t;

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SimplicialComplex> catalog_from(int n, Family base,
                                            const std::vector<VSet>& free_subsets) {
  const auto perms = all_permutations(n);
  // per-permutation subset relabel tables, so canonicalization walks set bits only
  std::vector<std::vector<std::uint8_t>> tables(perms.size());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    tables[p].resize(std::size_t(1) << n);
    for (VSet s = 0; s < (VSet(1) << n); ++s) {
      VSet t = 0;
      for (int v : vs_elements(s)) t |= VSet(1) << perms[p][static_cast<std::size_t>(v)];
      tables[p][static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(t);
    }
  }
  auto canonical = [&](Family f) {
    Family best = ~Family(0);
    for (const auto& tbl : tables) {
      Family out = 0, g = f;
      while (g) {
        const int s = std::countr_zero(g);
        g &= g - 1;
        out |= Family(1) << tbl[static_cast<std::size_t>(s)];
      }
      best = std::min(best, out);
    }
    return best;
  };
  std::set<Family> canon;
  // free subsets come sorted by (size, value), so prefixes of the DFS always
  // see every proper subset candidate before its supersets
  struct Frame {
    std::size_t next;
    Family fam;
  };
  std::vector<Frame> stack{{0, base}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (fr.next == free_subsets.size()) {
      canon.insert(canonical(fr.fam));
      continue;
    }
    const VSet s = free_subsets[fr.next];
    stack.push_back({fr.next + 1, fr.fam});  // skip s
    bool closed = true;
    for (int v : vs_elements(s))
      if (!(fr.fam >> (s & ~(VSet(1) << v)) & 1)) {
        closed = false;
        break;
      }
    if (closed) stack.push_back({fr.next + 1, fr.fam | (Family(1) << s)});
  }
  std::vector<SimplicialComplex> out;
  for (Family f : canon) {
    std::vector<VSet> facets;
    for (VSet s = 0; s < (VSet(1) << n); ++s) {
      if (!(f >> s & 1)) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v)
        if (!vs_contains(s, v) && (f >> (s | (VSet(1) << v)) & 1)) maximal = false;
      if (maximal) facets.push_back(s);
    }
    out.push_back(SimplicialComplex::from_facet_masks(n, facets));
  }
  std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets() < b.facets();
  });
  return out;
}

}  // namespace

std::vector<SimplicialComplex> catalog_complexes(int n) {
  if (n < 1 || n > 5) throw size_guard_error("catalog guarded at 1 <= n <= 5");
  Family base = 1;  // the empty face
  for (int v = 0; v < n; ++v) base |= Family(1) << (VSet(1) << v);
  std::vector<VSet> free_subsets;
  for (VSet s = 0; s < (VSet(1) << n); ++s)
    if (vs_size(s) >= 2) free_subsets.push_back(s);
  std::sort(free_subsets.begin(), free_subsets.end(), [](VSet a, VSet b) {
    return std::make_pair(vs_size(a), a) < std::make_pair(vs_size(b), b);
  });
  return catalog_from(n, base, free_subsets);
}

std::vector<SimplicialComplex> neighbourly_catalog(int n) {
  if (n < 1 || n > 6) throw size_guard_error("neighbourly catalog guarded at 1 <= n <= 6");
  const int level = n / 2;
  Family base = 1;  // vertices forced so nothing in the catalog has unused ones
  for (int v = 0; v < n; ++v) base |= Family(1) << (VSet(1) << v);
  std::vector<VSet> free_subsets;
  for (VSet s = 0; s < (VSet(1) << n); ++s) {
    if (vs_size(s) <= level)
      base |= Family(1) << s;
    else
      free_subsets.push_back(s);
  }
  std::sort(free_subsets.begin(), free_subsets.end(), [](VSet a, VSet b) {
    return std::make_pair(vs_size(a), a) < std::make_pair(vs_size(b), b);
  });
  return catalog_from(n, base, free_subsets);
}

}  // namespace maw
