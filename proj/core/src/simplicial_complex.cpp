#include "maw/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace maw {

namespace {

// Keep only inclusion-maximal masks, ascending.
std::vector<VSet> maximalize(std::vector<VSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && (sets[i] & sets[j]) == sets[i] && sets[i] != sets[j]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

void SimplicialComplex::set_identity_labels() {
  labels_.resize(n_);
  std::iota(labels_.begin(), labels_.end(), 1);
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  SimplicialComplex K;
  K.n_ = n;
  K.void_ = true;
  K.set_identity_labels();
  return K;
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
  SimplicialComplex K;
  K.n_ = n;
  K.void_ = false;
  K.set_identity_labels();
  return K;
}

SimplicialComplex SimplicialComplex::from_facet_masks(int n, std::vector<VSet> facets) {
  if (n < 0 || n > 63) throw input_error("vertex count out of range");
  SimplicialComplex K;
  K.n_ = n;
  K.void_ = false;
  for (VSet f : facets)
    if (f & ~vs_full(n)) throw input_error("facet vertex out of range");
  facets.erase(std::remove(facets.begin(), facets.end(), VSet(0)), facets.end());
  K.facets_ = maximalize(std::move(facets));
  K.set_identity_labels();
  return K;
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 const std::vector<std::vector<int>>& facets) {
  std::vector<VSet> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) {
    VSet m = 0;
    for (int v : f) {
      if (v < 1 || v > n) throw input_error("facet vertex out of range 1..n");
      if (vs_contains(m, v - 1)) throw input_error("repeated vertex in facet");
      m |= VSet(1) << (v - 1);
    }
    masks.push_back(m);
  }
  return from_facet_masks(n, std::move(masks));
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  return from_facet_masks(n, {vs_full(n)});
}

SimplicialComplex SimplicialComplex::skeleton(int n, int s) {
  if (s >= n) return simplex(n);
  if (s <= 0) return empty_complex(n);
  std::vector<VSet> facets;
  for (VSet m = 0; m <= vs_full(n); ++m)
    if (vs_size(m) == s) facets.push_back(m);
  return from_facet_masks(n, std::move(facets));
}

bool SimplicialComplex::has_face(VSet s) const {
  if (void_) return false;
  if (s == 0) return true;
  for (VSet f : facets_)
    if ((s & f) == s) return true;
  return false;
}

int SimplicialComplex::dim() const {
  if (void_) return -2;
  int d = -1;
  for (VSet f : facets_) d = std::max(d, vs_size(f) - 1);
  return d;
}

VSet SimplicialComplex::vertex_support() const {
  VSet s = 0;
  for (VSet f : facets_) s |= f;
  return s;
}

std::vector<std::vector<VSet>> SimplicialComplex::faces_by_size() const {
  if (n_ > 24) throw size_guard_error("face family materialization guarded at n <= 24");
  std::vector<std::vector<VSet>> out(static_cast<std::size_t>(std::max(dim(), -1) + 2));
  if (void_) return out;
  std::set<VSet> seen;
  for (VSet f : facets_) seen.insert(f);
  // peel downwards: every face is obtained from a facet by deleting vertices
  std::vector<VSet> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<VSet> next;
    for (VSet f : frontier) {
      VSet rest = f;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        VSet g = f & ~(VSet(1) << v);
        if (seen.insert(g).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  seen.insert(0);
  for (VSet f : seen) out[static_cast<std::size_t>(vs_size(f))].push_back(f);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<VSet> SimplicialComplex::faces_of_size(int s) const {
  auto all = faces_by_size();
  if (s < 0 || s >= static_cast<int>(all.size())) return {};
  return all[static_cast<std::size_t>(s)];
}

std::vector<long> SimplicialComplex::f_vector() const {
  auto all = faces_by_size();
  std::vector<long> f;
  f.reserve(all.size());
  for (const auto& level : all) f.push_back(static_cast<long>(level.size()));
  return f;
}

long SimplicialComplex::face_count() const {
  long total = 0;
  for (long c : f_vector()) total += c;
  return total;
}

SimplicialComplex SimplicialComplex::restriction(VSet I) const {
  if (I & ~vs_full(n_)) throw input_error("restriction mask out of range");
  SimplicialComplex K;
  K.n_ = vs_size(I);
  K.void_ = void_;
  auto positions = vs_elements(I);
  K.labels_.reserve(positions.size());
  for (int p : positions) K.labels_.push_back(labels_[static_cast<std::size_t>(p)]);
  if (!void_) {
    std::vector<VSet> restricted;
    restricted.reserve(facets_.size());
    for (VSet f : facets_) {
      VSet g = f & I;
      VSet packed = 0;
      for (std::size_t i = 0; i < positions.size(); ++i)
        if (vs_contains(g, positions[i])) packed |= VSet(1) << i;
      restricted.push_back(packed);
    }
    K.facets_ = maximalize(std::move(restricted));
  }
  return K;
}

SimplicialComplex SimplicialComplex::restriction_elems(const std::vector<int>& verts) const {
  VSet I = 0;
  for (int v : verts) {
    if (v < 1 || v > n_) throw input_error("restriction vertex out of range");
    I |= VSet(1) << (v - 1);
  }
  return restriction(I);
}

SimplicialComplex SimplicialComplex::deletion(int v_1based) const {
  if (v_1based < 1 || v_1based > n_) throw input_error("deleted vertex out of range");
  return restriction(vs_full(n_) & ~(VSet(1) << (v_1based - 1)));
}

bool SimplicialComplex::is_m_neighbourly(int m) const {
  if (void_) return false;
  if (m <= 0) return true;
  int s = std::min(m, n_);
  // downward closure: all size-s subsets being faces covers all smaller sizes
  for (VSet mask = 0; mask <= vs_full(n_); ++mask)
    if (vs_size(mask) == s && !has_face(mask)) return false;
  return true;
}

std::vector<VSet> SimplicialComplex::canonical_facets() const {
  if (n_ > 8) throw size_guard_error("canonical form guarded at n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n_));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<VSet> best;
  bool first = true;
  do {
    std::vector<VSet> mapped;
    mapped.reserve(facets_.size());
    for (VSet f : facets_) {
      VSet g = 0;
      VSet rest = f;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        g |= VSet(1) << perm[static_cast<std::size_t>(v)];
      }
      mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string SimplicialComplex::canonical_key() const {
  std::ostringstream os;
  os << "n" << n_;
  if (void_) {
    os << ";void";
    return os.str();
  }
  os << ";f";
  bool sep = false;
  for (VSet f : canonical_facets()) {
    os << (sep ? "," : "") << f;
    sep = true;
  }
  return os.str();
}

bool SimplicialComplex::isomorphic_to(const SimplicialComplex& other) const {
  if (n_ != other.n_ || void_ != other.void_) return false;
  return canonical_facets() == other.canonical_facets();
}

int SimplicialComplex::position_of_label(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
  for (int a : K.labels_)
    if (L.position_of_label(a) >= 0) throw input_error("join requires disjoint vertex labels");
  SimplicialComplex J;
  J.n_ = K.n_ + L.n_;
  if (J.n_ > 63) throw input_error("join too large");
  J.void_ = K.void_ || L.void_;
  J.labels_.resize(static_cast<std::size_t>(J.n_));
  std::merge(K.labels_.begin(), K.labels_.end(), L.labels_.begin(), L.labels_.end(),
             J.labels_.begin());
  if (J.void_) return J;
  // positions of K's and L's vertices inside the merged labeling
  auto embed = [&](const SimplicialComplex& S) {
    std::vector<int> pos(static_cast<std::size_t>(S.n_));
    for (int i = 0; i < S.n_; ++i) {
      auto it = std::lower_bound(J.labels_.begin(), J.labels_.end(),
                                 S.labels_[static_cast<std::size_t>(i)]);
      pos[static_cast<std::size_t>(i)] = static_cast<int>(it - J.labels_.begin());
    }
    return pos;
  };
  auto posK = embed(K), posL = embed(L);
  auto lift = [](VSet f, const std::vector<int>& pos) {
    VSet g = 0;
    VSet rest = f;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      g |= VSet(1) << pos[static_cast<std::size_t>(v)];
    }
    return g;
  };
  std::vector<VSet> fs;
  const std::vector<VSet> fK = K.facets_.empty() ? std::vector<VSet>{0} : K.facets_;
  const std::vector<VSet> fL = L.facets_.empty() ? std::vector<VSet>{0} : L.facets_;
  for (VSet a : fK)
    for (VSet b : fL) fs.push_back(lift(a, posK) | lift(b, posL));
  J.facets_ = maximalize(std::move(fs));
  return J;
}

VSet SimplicialMap::face_image(VSet s) const {
  VSet out = 0;
  VSet rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    out |= VSet(1) << image[static_cast<std::size_t>(v)];
  }
  return out;
}

bool SimplicialMap::valid() const {
  if (static_cast<int>(image.size()) != source.n()) return false;
  for (int p : image)
    if (p < 0 || p >= target.n()) return false;
  for (VSet f : source.facets())
    if (!target.has_face(face_image(f))) return false;
  return true;
}

SimplicialMap SimplicialMap::then(const SimplicialMap& g) const {
  if (target.n() != g.source.n()) throw input_error("map composition mismatch");
  SimplicialMap h;
  h.source = source;
  h.target = g.target;
  h.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    h.image[i] = g.image[static_cast<std::size_t>(image[i])];
  return h;
}

SimplicialMap iota_inclusion(const SimplicialComplex& K, VSet I, VSet J) {
  if (I == 0 || J == 0) throw input_error("iota inclusion needs non-empty index sets");
  if (I & J) throw input_error("iota inclusion needs disjoint index sets");
  SimplicialMap m;
  m.source = K.restriction(I | J);
  m.target = join(K.restriction(I), K.restriction(J));
  m.image.resize(static_cast<std::size_t>(m.source.n()));
  for (int p = 0; p < m.source.n(); ++p) {
    int lbl = m.source.labels()[static_cast<std::size_t>(p)];
    int q = m.target.position_of_label(lbl);
    if (q < 0) throw input_error("iota inclusion label mismatch");
    m.image[static_cast<std::size_t>(p)] = q;
  }
  return m;
}

}  // namespace maw
