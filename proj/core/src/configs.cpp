#include "maw/configs.hpp"

#include <algorithm>
#include <set>

namespace maw {

std::string to_string(const ConfigLabel& l) {
  std::string c = l.cls == CoordClass::MinusOne ? "-1"
                  : l.cls == CoordClass::PlusOne ? "+1"
                                                 : "int";
  return "(" + std::to_string(l.index) + "," + c + ")";
}

bool is_represented(const std::vector<ConfigLabel>& labels, const SimplicialComplex& K,
                    int k) {
  std::set<int> seen;
  VSet interior = 0;
  int non_base = 0;
  for (const auto& l : labels) {
    if (l.index < 1 || l.index > K.n()) return false;
    if (!seen.insert(l.index).second) return false;
    if (l.cls == CoordClass::Interior) interior |= VSet(1) << (l.index - 1);
    if (l.cls != CoordClass::MinusOne) ++non_base;
  }
  return K.has_face(interior) && non_base <= k;
}

PropertyACheck property_A_check(const SimplicialComplex& K, int m, int k,
                                const RepresentedOracle& oracle) {
  if (!(0 <= m && m < k && k <= K.n())) throw input_error("need 0 <= m < k <= n");
  RepresentedOracle rep = oracle;
  if (!rep) rep = [](const std::vector<ConfigLabel>& ls, const SimplicialComplex& KK,
                     int kk) { return is_represented(ls, KK, kk); };
  PropertyACheck out;
  out.holds = true;
  // multisets of size m over the alphabet (index, class): non-decreasing tuples
  std::vector<ConfigLabel> alphabet;
  for (int i = 1; i <= K.n(); ++i)
    for (CoordClass c : {CoordClass::MinusOne, CoordClass::Interior, CoordClass::PlusOne})
      alphabet.push_back({i, c});
  std::vector<ConfigLabel> cur;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(cur.size()) == m) {
      ++out.multisets_checked;
      if (rep(cur, K, k) != rep(cur, K, m)) {
        out.holds = false;
        out.witness = cur;
        return false;
      }
      return true;
    }
    for (std::size_t a = from; a < alphabet.size(); ++a) {
      cur.push_back(alphabet[a]);
      bool go = self(self, a);
      cur.pop_back();
      if (!go) return false;
    }
    return true;
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<int>> mn_partitions(int m, int n) {
  if (m < 0 || n < 0) throw input_error("need m, n >= 0");
  std::vector<std::vector<int>> out;
  if (n == 0) {
    if (m == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, m);
  return out;
}

std::vector<int> particle_order(const std::vector<Particle>& particles) {
  const int m = static_cast<int>(particles.size());
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& pa = particles[static_cast<std::size_t>(a)];
    const auto& pb = particles[static_cast<std::size_t>(b)];
    if (pa.summand != pb.summand) return pa.summand < pb.summand;
    return pa.position < pb.position;
  });
  for (int r = 1; r < m; ++r) {
    const auto& pa = particles[static_cast<std::size_t>(idx[static_cast<std::size_t>(r - 1)])];
    const auto& pb = particles[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
    if (pa.summand == pb.summand && pa.position == pb.position)
      throw input_error("two particles of one summand collide");
  }
  std::vector<int> rank(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
  return rank;
}

bool subset_before_eq(VSet rank_mask_a, VSet rank_mask_b) {
  return rank_mask_a <= rank_mask_b;
}

Rat eta(const std::vector<Particle>& particles, const std::vector<Rat>& weights, VSet S) {
  const int m = static_cast<int>(particles.size());
  if (weights.size() != particles.size()) throw input_error("one weight per particle");
  if (m > 20) throw size_guard_error("embedding values guarded at 20 particles");
  for (const auto& w : weights)
    if (w <= 0) throw input_error("weights must be positive");
  if (S >> m) throw input_error("subset mask out of range");
  auto ranks = particle_order(particles);
  std::vector<Rat> weight_by_rank(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    weight_by_rank[static_cast<std::size_t>(ranks[static_cast<std::size_t>(i)]) - 1] =
        weights[static_cast<std::size_t>(i)];
  VSet Sr = 0;
  for (int i = 0; i < m; ++i)
    if (vs_contains(S, i)) Sr |= VSet(1) << (ranks[static_cast<std::size_t>(i)] - 1);
  Rat total(0);
  for (VSet T = 0; subset_before_eq(T, Sr); ++T) {
    Rat prod(1);
    for (int r : vs_elements(T)) prod *= weight_by_rank[static_cast<std::size_t>(r)];
    total += prod;
  }
  return total;
}

}  // namespace maw
