#include "maw/homology.hpp"

#include <map>
#include <stdexcept>

namespace maw {

namespace {
const SparseIntMatrix kEmptyMatrix{};
}

const SparseIntMatrix& ChainComplexData::boundary(int degree) const {
  int k = degree + 1;
  if (k < 0 || k >= static_cast<int>(bnd_.size())) return kEmptyMatrix;
  return bnd_[static_cast<std::size_t>(k)];
}

void ChainComplexData::finalize() {
  snf_cache_.assign(bnd_.size() + 1, {});
  snf_done_.assign(bnd_.size() + 1, 0);
  // d(d) = 0, checked column by column through the sparse structure
  for (std::size_t k = 1; k < bnd_.size(); ++k) {
    const auto& hi = bnd_[k];
    const auto& lo = bnd_[k - 1];
    for (int j = 0; j < hi.cols; ++j) {
      std::map<int, long long> acc;
      for (auto [i, v] : hi.col_entries[static_cast<std::size_t>(j)])
        for (auto [i2, v2] : lo.col_entries[static_cast<std::size_t>(i)]) acc[i2] += v * v2;
      for (auto& [row, val] : acc)
        if (val != 0) throw std::logic_error("boundary of boundary is nonzero");
    }
  }
}

ChainComplexData ChainComplexData::from_complex(const SimplicialComplex& K) {
  ChainComplexData cc;
  if (K.is_void()) return cc;
  auto levels = K.faces_by_size();  // levels[s] = size-s faces, ascending masks
  const int top = static_cast<int>(levels.size()) - 1;
  cc.dims_.resize(static_cast<std::size_t>(top) + 1);
  for (int s = 0; s <= top; ++s) cc.dims_[static_cast<std::size_t>(s)] =
      static_cast<long>(levels[static_cast<std::size_t>(s)].size());
  cc.bnd_.resize(static_cast<std::size_t>(top) + 1);
  cc.bnd_[0] = SparseIntMatrix(0, 1);
  std::map<VSet, int> index_below;
  index_below[0] = 0;
  for (int s = 1; s <= top; ++s) {
    const auto& here = levels[static_cast<std::size_t>(s)];
    SparseIntMatrix d(static_cast<int>(levels[static_cast<std::size_t>(s - 1)].size()),
                      static_cast<int>(here.size()));
    for (int j = 0; j < static_cast<int>(here.size()); ++j) {
      VSet face = here[static_cast<std::size_t>(j)];
      int pos = 0;
      VSet rest = face;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        VSet sub = face & ~(VSet(1) << v);
        auto it = index_below.find(sub);
        if (it == index_below.end()) throw std::logic_error("missing boundary face");
        d.col_entries[static_cast<std::size_t>(j)].push_back(
            {it->second, (pos % 2 == 0) ? 1 : -1});
        ++pos;
      }
    }
    cc.bnd_[static_cast<std::size_t>(s)] = std::move(d);
    index_below.clear();
    for (int i = 0; i < static_cast<int>(here.size()); ++i)
      index_below[here[static_cast<std::size_t>(i)]] = i;
  }
  cc.finalize();
  return cc;
}

ChainComplexData ChainComplexData::from_face_lists(
    const std::vector<std::vector<std::vector<int>>>& faces_by_size) {
  ChainComplexData cc;
  int top = 0;
  for (std::size_t s = 1; s < faces_by_size.size(); ++s)
    if (!faces_by_size[s].empty()) top = static_cast<int>(s);
  cc.dims_.resize(static_cast<std::size_t>(top) + 1);
  cc.dims_[0] = 1;
  for (int s = 1; s <= top; ++s)
    cc.dims_[static_cast<std::size_t>(s)] = s < static_cast<int>(faces_by_size.size())
        ? static_cast<long>(faces_by_size[static_cast<std::size_t>(s)].size())
        : 0;
  cc.bnd_.resize(static_cast<std::size_t>(top) + 1);
  cc.bnd_[0] = SparseIntMatrix(0, 1);
  std::map<std::vector<int>, int> index_below;
  index_below[{}] = 0;
  for (int s = 1; s <= top; ++s) {
    const auto& here = faces_by_size[static_cast<std::size_t>(s)];
    SparseIntMatrix d(static_cast<int>(index_below.size()), static_cast<int>(here.size()));
    for (int j = 0; j < static_cast<int>(here.size()); ++j) {
      const auto& face = here[static_cast<std::size_t>(j)];
      if (static_cast<int>(face.size()) != s)
        throw input_error("face of the wrong size in a size-s list");
      for (int v = 1; v < static_cast<int>(face.size()); ++v)
        if (face[static_cast<std::size_t>(v - 1)] >= face[static_cast<std::size_t>(v)])
          throw input_error("face vertices must be strictly increasing");
      for (int drop = 0; drop < s; ++drop) {
        std::vector<int> sub;
        sub.reserve(static_cast<std::size_t>(s) - 1);
        for (int v = 0; v < s; ++v)
          if (v != drop) sub.push_back(face[static_cast<std::size_t>(v)]);
        auto it = index_below.find(sub);
        if (it == index_below.end())
          throw input_error("face lists are not downward closed");
        d.col_entries[static_cast<std::size_t>(j)].push_back(
            {it->second, (drop % 2 == 0) ? 1 : -1});
      }
    }
    cc.bnd_[static_cast<std::size_t>(s)] = std::move(d);
    index_below.clear();
    for (int i = 0; i < static_cast<int>(here.size()); ++i)
      index_below[here[static_cast<std::size_t>(i)]] = i;
  }
  cc.finalize();
  return cc;
}

const std::vector<Int>& ChainComplexData::snf_diagonal(int degree) const {
  static const std::vector<Int> empty{};
  int k = degree + 1;
  if (k < 0 || k >= static_cast<int>(bnd_.size())) return empty;
  if (!snf_done_[static_cast<std::size_t>(k)]) {
    snf_cache_[static_cast<std::size_t>(k)] = snf_diagonal_sparse(bnd_[static_cast<std::size_t>(k)]);
    snf_done_[static_cast<std::size_t>(k)] = 1;
  }
  return snf_cache_[static_cast<std::size_t>(k)];
}

long ChainComplexData::rank_z(int degree) const {
  long r = 0;
  for (const Int& d : snf_diagonal(degree))
    if (d != 0) ++r;
  return r;
}

long ChainComplexData::rank_mod(int degree, long long p) const {
  long r = 0;
  for (const Int& d : snf_diagonal(degree))
    if (d != 0 && d % p != 0) ++r;
  return r;
}

HomologySummary reduced_homology_z(const ChainComplexData& cc) {
  HomologySummary out;
  const int top = cc.top_degree();
  if (top < -1) return out;
  out.groups.resize(static_cast<std::size_t>(top) + 2);
  for (int d = -1; d <= top; ++d) {
    HomologyGroup g;
    g.free_rank = cc.dim(d) - cc.rank_z(d) - cc.rank_z(d + 1);
    for (const Int& v : cc.snf_diagonal(d + 1))
      if (v > 1) g.torsion.push_back(v);
    out.groups[static_cast<std::size_t>(d + 1)] = std::move(g);
  }
  return out;
}

HomologySummary reduced_homology_z(const SimplicialComplex& K) {
  return reduced_homology_z(ChainComplexData::from_complex(K));
}

FieldDims reduced_homology_dims(const ChainComplexData& cc, FieldSpec field) {
  FieldDims out;
  const int top = cc.top_degree();
  if (top < -1) return out;
  out.dims.resize(static_cast<std::size_t>(top) + 2);
  for (int d = -1; d <= top; ++d) {
    long rk_d = field.is_rational() ? cc.rank_z(d) : cc.rank_mod(d, field.p);
    long rk_up = field.is_rational() ? cc.rank_z(d + 1) : cc.rank_mod(d + 1, field.p);
    out.dims[static_cast<std::size_t>(d + 1)] = cc.dim(d) - rk_d - rk_up;
  }
  return out;
}

FieldDims reduced_homology_dims(const SimplicialComplex& K, FieldSpec field) {
  return reduced_homology_dims(ChainComplexData::from_complex(K), field);
}

}  // namespace maw
