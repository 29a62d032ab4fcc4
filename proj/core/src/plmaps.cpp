#include "maw/plmaps.hpp"

#include <algorithm>
#include <sstream>

namespace maw {

SmashPoint SmashPoint::make(std::vector<Rat> coords) {
  SmashPoint p;
  p.n = static_cast<int>(coords.size());
  for (const auto& c : coords) {
    if (c < -1 || c > 1) throw input_error("smash coordinate outside [-1,1]");
    if (c == -1) {
      p.basepoint = true;
      return p;
    }
  }
  p.x = std::move(coords);
  return p;
}

SmashPoint SmashPoint::base(int n) {
  SmashPoint p;
  p.n = n;
  p.basepoint = true;
  return p;
}

VSet SmashPoint::support_ne1() const {
  VSet s = 0;
  if (basepoint) return s;
  for (int i = 0; i < n; ++i)
    if (x[static_cast<std::size_t>(i)] != 1) s |= VSet(1) << i;
  return s;
}

std::string SmashPoint::to_string() const {
  if (basepoint) return "*";
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < n; ++i) {
    if (i) os << ",";
    os << x[static_cast<std::size_t>(i)].str();
  }
  os << ")";
  return os.str();
}

BarycentricPoint BarycentricPoint::make(std::vector<Rat> coords) {
  BarycentricPoint p;
  p.n = static_cast<int>(coords.size());
  Rat sum(0);
  for (const auto& c : coords) {
    if (c < 0) throw input_error("barycentric coordinate negative");
    sum += c;
  }
  if (sum != 1) throw input_error("barycentric coordinates must sum to 1");
  p.z = std::move(coords);
  return p;
}

VSet BarycentricPoint::support() const {
  VSet s = 0;
  for (int i = 0; i < n; ++i)
    if (z[static_cast<std::size_t>(i)] != 0) s |= VSet(1) << i;
  return s;
}

std::string BarycentricPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < n; ++i) {
    if (i) os << ",";
    os << z[static_cast<std::size_t>(i)].str();
  }
  os << ")";
  return os.str();
}

SmashPoint h_eval(const Rat& t, const BarycentricPoint& z) {
  if (t < -1 || t > 1) throw input_error("suspension parameter outside [-1,1]");
  if (t == -1) return SmashPoint::base(z.n);
  if (t == 1) return SmashPoint::make(std::vector<Rat>(static_cast<std::size_t>(z.n), Rat(1)));
  int chart = 0;
  for (int i = 1; i < z.n; ++i)
    if (z.z[static_cast<std::size_t>(i)] > z.z[static_cast<std::size_t>(chart)]) chart = i;
  const Rat& zi = z.z[static_cast<std::size_t>(chart)];
  std::vector<Rat> out(static_cast<std::size_t>(z.n));
  for (int j = 0; j < z.n; ++j)
    out[static_cast<std::size_t>(j)] =
        t + (1 - t) * (zi - z.z[static_cast<std::size_t>(j)]) / zi;
  return SmashPoint::make(std::move(out));
}

HInv h_inv_eval(const SmashPoint& x) {
  HInv out;
  const std::vector<Rat> center(static_cast<std::size_t>(x.n), Rat(1, x.n));
  if (x.basepoint) {
    out.t = Rat(-1);
    out.z = BarycentricPoint::make(center);
    return out;
  }
  Rat sum(0);
  Rat tmin = x.x[0];
  for (const auto& c : x.x) {
    sum += c;
    if (c < tmin) tmin = c;
  }
  if (sum == x.n) {  // all coordinates 1
    out.t = Rat(1);
    out.z = BarycentricPoint::make(center);
    return out;
  }
  out.t = tmin;
  std::vector<Rat> z(static_cast<std::size_t>(x.n));
  const Rat denom = Rat(x.n) - sum;
  for (int j = 0; j < x.n; ++j) z[static_cast<std::size_t>(j)] = (1 - x.x[static_cast<std::size_t>(j)]) / denom;
  out.z = BarycentricPoint::make(std::move(z));
  return out;
}

bool smash_membership(const SmashPoint& x, const SimplicialComplex& L,
                      const OrderedPartition& blocks) {
  if (x.basepoint) return true;
  if (x.n != L.n() || blocks.n != L.n() || !blocks.valid())
    throw input_error("membership target does not match the point");
  const VSet supp = x.support_ne1();
  for (VSet b : blocks.blocks)
    if (!L.has_face(supp & b)) return false;
  return true;
}

namespace {

void check_interval(const std::vector<Rat>& ts) {
  for (const auto& t : ts)
    if (t < -1 || t > 1) throw input_error("suspension parameter outside [-1,1]");
}

bool any_unit(const std::vector<Rat>& ts) {
  for (const auto& t : ts)
    if (t == 1 || t == -1) return true;
  return false;
}

std::vector<Rat> with_zero(const std::vector<Rat>& ts) {
  std::vector<Rat> v(ts);
  v.push_back(Rat(0));
  return v;
}

}  // namespace

PhiResult phi_eval(const SimplicialComplex& K, const std::vector<Rat>& ts, const Rat& t,
                   const BarycentricPoint& z) {
  const int n = K.n();
  if (static_cast<int>(ts.size()) != n - 1)
    throw input_error("need n-1 suspension parameters");
  check_interval(ts);
  if (t < -1 || t > 1) throw input_error("suspension parameter outside [-1,1]");
  if (z.n != n) throw input_error("barycentric point has wrong arity");
  if (!K.has_face(z.support())) throw input_error("support of z is not a face");
  PhiResult out;
  Rat beta(0);
  for (const auto& ti : ts) {
    Rat a = rat_abs(ti);
    if (a > beta) beta = a;
  }
  out.s = 2 * beta - 1;
  out.y = with_zero(ts);
  out.blocks = ordered_partition_from_sequence(out.y);
  out.basepoint = any_unit(ts) || t == -1 || beta == 0;
  const VSet supp = z.support();
  out.member = true;
  for (VSet b : out.blocks.blocks)
    if (!K.has_face(supp & b)) out.member = false;
  if (out.basepoint) out.member = true;
  return out;
}

PsiResult psi_neighbourly_eval(const SimplicialComplex& K, const std::vector<Rat>& ts,
                               const SmashPoint& x) {
  const int n = K.n();
  if (!K.is_neighbourly()) throw input_error("complex is not neighbourly");
  if (static_cast<int>(ts.size()) != n - 1)
    throw input_error("need n-1 suspension parameters");
  check_interval(ts);
  if (x.n != n) throw input_error("smash point has wrong arity");
  if (!x.basepoint && !K.has_face(x.support_ne1()))
    throw input_error("point is outside the single-block subspace");
  PsiResult out;
  out.blocks = ordered_partition_from_sequence(with_zero(ts));
  const auto T = with_zero(ts);
  Rat beta(0);
  for (const auto& ti : ts) {
    Rat a = rat_abs(ti);
    if (a > beta) beta = a;
  }
  out.beta = beta;
  const int half = n / 2;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> dist;
    for (int j = 0; j < n; ++j)
      if (j != i) dist.push_back(rat_abs(T[static_cast<std::size_t>(i)] - T[static_cast<std::size_t>(j)]));
    std::sort(dist.begin(), dist.end());
    Rat a(0);
    for (int k = 0; k < half; ++k) a += dist[static_cast<std::size_t>(k)];
    out.alphas.push_back(a);
  }
  if (x.basepoint || any_unit(ts)) {
    out.out = SmashPoint::base(n);
    out.member = true;
    return out;
  }
  std::vector<Rat> y(static_cast<std::size_t>(n));
  const Rat half_rat(1, 2);
  for (int i = 0; i < n; ++i) {
    const Rat& xi = x.x[static_cast<std::size_t>(i)];
    const Rat slope = out.alphas[static_cast<std::size_t>(i)] < half_rat
                          ? Rat(1 - 2 * out.alphas[static_cast<std::size_t>(i)] * beta)
                          : Rat(1 - beta);
    y[static_cast<std::size_t>(i)] = slope * (xi + 1) - 1;
  }
  out.out = SmashPoint::make(std::move(y));
  out.member = smash_membership(out.out, K, out.blocks);
  return out;
}

PsiDisjointResult psi_disjoint_vertex_eval(const SimplicialComplex& K,
                                           const SmashEvaluator& inner,
                                           const std::vector<Rat>& ts, const Rat& s,
                                           const SmashPoint& x) {
  const int n = K.n();
  if (s < -1 || s > 1) throw input_error("suspension parameter outside [-1,1]");
  auto in = inner(ts, x);
  PsiDisjointResult out;
  Rat alpha(0), beta(0);
  for (const auto& t : ts) {
    if (t < alpha) alpha = t;
    if (t > beta) beta = t;
  }
  if (s == 1 || s == -1)
    out.y = Rat(-1);
  else if (s >= alpha && s <= beta)
    out.y = Rat(1);
  else if (s > beta)
    out.y = 2 * ((1 - s) / (1 - beta)) - 1;
  else
    out.y = 2 * ((1 + s) / (1 + alpha)) - 1;

  // the added vertex is a face of the extended complex on its own
  std::vector<VSet> facets(K.facets());
  facets.push_back(VSet(1) << n);
  SimplicialComplex L = SimplicialComplex::from_facet_masks(n + 1, facets);

  // vertex n keeps the terminal zero; the added vertex n+1 carries s, so it
  // joins an existing level set when s hits 0 or some t_i and is a singleton
  // block otherwise
  std::vector<Rat> tv(ts);
  tv.push_back(Rat(0));
  tv.push_back(s);
  out.blocks = ordered_partition_from_sequence(tv);

  if (in.out.basepoint || out.y == -1) {
    out.out = SmashPoint::base(n + 1);
    out.member = true;
    return out;
  }
  std::vector<Rat> coords(in.out.x);
  coords.push_back(out.y);
  out.out = SmashPoint::make(std::move(coords));
  out.member = smash_membership(out.out, L, out.blocks);
  return out;
}

PsiDisjointResult psi_disjoint_vertex_eval(const SimplicialComplex& K,
                                           const std::vector<Rat>& ts, const Rat& s,
                                           const SmashPoint& x) {
  return psi_disjoint_vertex_eval(
      K,
      [&K](const std::vector<Rat>& t, const SmashPoint& p) {
        return psi_neighbourly_eval(K, t, p);
      },
      ts, s, x);
}

Rat faithful_homotopy_eval(const Rat& t, const Rat& s) {
  if (t < 0 || t > 1) throw input_error("homotopy time outside [0,1]");
  if (s < 0 || s > 1) throw input_error("coordinate outside [0,1]");
  const Rat q(1, 4);
  const Rat h(1, 2);
  if (s <= q) return s * (1 - t);
  if (s < 3 * q) return s + t * (s - h);
  return s + t * (1 - s);
}

Rat faithful_homotopy_eval_pm(const Rat& t, const Rat& s) {
  if (s < -1 || s > 1) throw input_error("coordinate outside [-1,1]");
  return 2 * faithful_homotopy_eval(t, (s + 1) / 2) - 1;
}

}  // namespace maw
