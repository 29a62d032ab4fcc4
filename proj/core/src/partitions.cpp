#include "maw/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace maw {

bool OrderedPartition::valid() const {
  if (n < 1 || blocks.empty()) return false;
  VSet seen = 0;
  for (VSet b : blocks) {
    if (b == 0 || (b & seen)) return false;
    seen |= b;
  }
  return seen == vs_full(n);
}

std::string OrderedPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ",";
    os << "{";
    auto elems = vs_elements(blocks[i]);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j) os << ",";
      os << elems[j] + 1;
    }
    os << "}";
  }
  os << ")";
  return os.str();
}

std::vector<VSet> OrderedPartition::prefixes() const {
  std::vector<VSet> out;
  VSet acc = 0;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    acc |= blocks[i];
    out.push_back(acc);
  }
  return out;
}

OrderedPartition OrderedPartition::from_prefixes(int n, const std::vector<VSet>& chain) {
  OrderedPartition P;
  P.n = n;
  VSet prev = 0;
  for (VSet a : chain) {
    if ((a & prev) != prev || a == prev) throw input_error("prefix chain must be nested");
    P.blocks.push_back(a & ~prev);
    prev = a;
  }
  if (prev == vs_full(n)) throw input_error("prefixes must be proper subsets");
  P.blocks.push_back(vs_full(n) & ~prev);
  if (!P.valid()) throw input_error("invalid prefix chain");
  return P;
}

OrderedPartition ordered_partition_from_sequence(const std::vector<SeqValue>& vals) {
  if (vals.empty()) throw input_error("empty value sequence");
  std::vector<int> order(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return vals[static_cast<std::size_t>(a)] < vals[static_cast<std::size_t>(b)]; });
  OrderedPartition P;
  P.n = static_cast<int>(vals.size());
  VSet cur = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && !(vals[static_cast<std::size_t>(order[k - 1])] == vals[static_cast<std::size_t>(order[k])])) {
      P.blocks.push_back(cur);
      cur = 0;
    }
    cur |= VSet(1) << order[k];
  }
  P.blocks.push_back(cur);
  return P;
}

OrderedPartition ordered_partition_from_sequence(const std::vector<Rat>& vals) {
  std::vector<SeqValue> sv;
  sv.reserve(vals.size());
  for (const auto& v : vals) sv.push_back(SeqValue::exact(v));
  return ordered_partition_from_sequence(sv);
}

OrderedPartition face_map(const OrderedPartition& P, int i) {
  if (i < 1 || i >= P.length()) throw input_error("face map index out of range");
  OrderedPartition Q;
  Q.n = P.n;
  for (int k = 0; k < P.length(); ++k) {
    if (k == i) {
      Q.blocks.back() |= P.blocks[static_cast<std::size_t>(k)];
    } else {
      Q.blocks.push_back(P.blocks[static_cast<std::size_t>(k)]);
    }
  }
  return Q;
}

std::vector<long> PermutohedralComplex::counts_by_len() const {
  std::vector<long> out(faces_by_len.size());
  for (std::size_t m = 0; m < faces_by_len.size(); ++m)
    out[m] = static_cast<long>(faces_by_len[m].size());
  return out;
}

std::vector<int> PermutohedralComplex::vertex_ids(const OrderedPartition& P) {
  std::vector<int> ids;
  for (VSet a : P.prefixes()) ids.push_back(static_cast<int>(a) - 1);
  return ids;
}

PermutohedralComplex build_Kn(int n) {
  if (n < 2 || n > 7) throw size_guard_error("permutohedral complex guarded at 2 <= n <= 7");
  PermutohedralComplex C;
  C.n = n;
  C.faces_by_len.resize(static_cast<std::size_t>(n) + 1);
  const VSet full = vs_full(n);
  // depth-first over nested proper prefixes; ids stay sorted because nested
  // masks increase as integers
  std::vector<VSet> chain;
  auto emit = [&]() {
    C.faces_by_len[chain.size() + 1].push_back(OrderedPartition::from_prefixes(n, chain));
  };
  std::vector<std::vector<VSet>> supersets(std::size_t(1) << n);
  for (VSet a = 0; a < full; ++a)
    for (VSet b = a + 1; b < full; ++b)
      if ((a & b) == a) supersets[static_cast<std::size_t>(a)].push_back(b);
  auto dfs = [&](auto&& self, VSet top) -> void {
    emit();
    for (VSet nxt : supersets[static_cast<std::size_t>(top)]) {
      chain.push_back(nxt);
      self(self, nxt);
      chain.pop_back();
    }
  };
  dfs(dfs, 0);
  for (auto& level : C.faces_by_len) std::sort(level.begin(), level.end());
  return C;
}

ChainComplexData PermutohedralComplex::chain_complex() const {
  std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(n));
  for (int m = 2; m <= n; ++m)
    for (const auto& P : faces_by_len[static_cast<std::size_t>(m)])
      faces[static_cast<std::size_t>(m) - 1].push_back(vertex_ids(P));
  return ChainComplexData::from_face_lists(faces);
}

SimplicialComplex PermutohedralComplex::to_simplicial() const {
  if (n > 6) throw size_guard_error("facet mask form guarded at n <= 6");
  std::vector<VSet> facets;
  for (const auto& P : faces_by_len[static_cast<std::size_t>(n)]) {
    VSet f = 0;
    for (int id : vertex_ids(P)) f |= VSet(1) << id;
    facets.push_back(f);
  }
  return SimplicialComplex::from_facet_masks(static_cast<int>(vertex_count()), facets);
}

SphereCheck verify_sphere(int n) {
  SphereCheck out;
  out.n = n;
  auto C = build_Kn(n);
  out.counts_by_len = C.counts_by_len();
  out.top_count = out.counts_by_len[static_cast<std::size_t>(n)];
  auto cc = C.chain_complex();
  out.homology = reduced_homology_z(cc);
  out.homology_ok = true;
  for (int d = -1; d <= cc.top_degree(); ++d) {
    const auto& g = out.homology.at_degree(d);
    const bool want_sphere_degree = d == n - 2;
    if (g.torsion.empty() && g.free_rank == (want_sphere_degree ? 1 : 0)) continue;
    out.homology_ok = false;
  }
  // every ridge (one block of size two) lies in exactly two facets
  std::map<OrderedPartition, int> ridge_count;
  for (const auto& P : C.faces_by_len[static_cast<std::size_t>(n)])
    for (int i = 1; i < n; ++i) ++ridge_count[face_map(P, i)];
  out.pseudomanifold_ok =
      ridge_count.size() == C.faces_by_len[static_cast<std::size_t>(n) - 1].size();
  for (const auto& [ridge, cnt] : ridge_count)
    if (cnt != 2) out.pseudomanifold_ok = false;
  out.ok = out.homology_ok && out.pseudomanifold_ok;
  return out;
}

bool KnPoint::valid() const {
  if (!carrier.valid() || carrier.length() < 2) return false;
  if (weights.size() != static_cast<std::size_t>(carrier.length()) - 1) return false;
  Rat sum(0);
  for (const auto& w : weights) {
    if (w < 0) return false;
    sum += w;
  }
  return sum == 1;
}

KnPoint canonicalize(const KnPoint& p) {
  if (!p.valid()) throw input_error("invalid barycentric point");
  auto chain = p.carrier.prefixes();
  std::vector<VSet> kept;
  std::vector<Rat> w;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (p.weights[i] != 0) {
      kept.push_back(chain[i]);
      w.push_back(p.weights[i]);
    }
  if (kept.empty()) throw input_error("all weights vanish");
  KnPoint out;
  out.carrier = OrderedPartition::from_prefixes(p.carrier.n, kept);
  out.weights = std::move(w);
  return out;
}

std::vector<Rat> tau(const KnPoint& gamma, const Rat& t) {
  if (!gamma.valid()) throw input_error("invalid barycentric point");
  const int n = gamma.carrier.n;
  // t_j = total weight of carrier prefixes avoiding j
  std::vector<Rat> tj(static_cast<std::size_t>(n), Rat(0));
  auto chain = gamma.carrier.prefixes();
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (int j = 0; j < n; ++j)
      if (!vs_contains(chain[i], j)) tj[static_cast<std::size_t>(j)] += gamma.weights[i];
  Rat beta(0);
  for (int j = 0; j + 1 < n; ++j) {
    Rat d = rat_abs(tj[static_cast<std::size_t>(j)] - tj[static_cast<std::size_t>(n - 1)]);
    if (d > beta) beta = d;
  }
  if (beta == 0) throw input_error("degenerate point: all coordinates collapse");
  std::vector<Rat> out(static_cast<std::size_t>(n) - 1);
  for (int j = 0; j + 1 < n; ++j)
    out[static_cast<std::size_t>(j)] =
        t / beta * (tj[static_cast<std::size_t>(j)] - tj[static_cast<std::size_t>(n - 1)]);
  return out;
}

KnPoint tau_inv(const std::vector<Rat>& coords) {
  const int n = static_cast<int>(coords.size()) + 1;
  if (n < 2) throw input_error("need at least one coordinate");
  std::vector<Rat> vals(coords);
  vals.push_back(Rat(0));
  std::vector<Rat> distinct(vals);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) throw input_error("degenerate coordinates: single level set");
  KnPoint out;
  out.carrier = ordered_partition_from_sequence(vals);
  const Rat spread = distinct.back() - distinct.front();
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
    out.weights.push_back((distinct[i + 1] - distinct[i]) / spread);
  return out;
}

}  // namespace maw
