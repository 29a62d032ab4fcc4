#pragma once

#include <vector>

#include "maw/field_matrix.hpp"
#include "maw/fields.hpp"
#include "maw/simplicial_complex.hpp"
#include "maw/snf.hpp"

namespace maw {

struct HomologyGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// Reduced homology; index 0 corresponds to degree -1.
struct HomologySummary {
  std::vector<HomologyGroup> groups;

  int top_degree() const { return static_cast<int>(groups.size()) - 2; }
  const HomologyGroup& at_degree(int d) const {
    static const HomologyGroup zero{};
    int k = d + 1;
    if (k < 0 || k >= static_cast<int>(groups.size())) return zero;
    return groups[static_cast<std::size_t>(k)];
  }
  bool all_trivial() const {
    for (const auto& g : groups)
      if (!g.trivial()) return false;
    return true;
  }
};

// Reduced Betti numbers over a field; index 0 corresponds to degree -1.
struct FieldDims {
  std::vector<long> dims;

  long at_degree(int d) const {
    int k = d + 1;
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(k)];
  }
  long total() const {
    long t = 0;
    for (long x : dims) t += x;
    return t;
  }
  bool operator==(const FieldDims&) const = default;
};

// Augmented (reduced) chain complex with integer boundary matrices.
// Internal index k corresponds to degree k-1, so index 0 is the span of the
// empty face.  d(d) = 0 is verified sparsely on construction.
class ChainComplexData {
 public:
  static ChainComplexData from_complex(const SimplicialComplex& K);
  // faces_by_size[s] lists size-s faces as strictly increasing vertex id
  // vectors; the empty face is added implicitly; s starts at 1.
  static ChainComplexData from_face_lists(
      const std::vector<std::vector<std::vector<int>>>& faces_by_size);

  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  long dim(int degree) const {
    int k = degree + 1;
    if (k < 0 || k >= static_cast<int>(dims_.size())) return 0;
    return dims_[static_cast<std::size_t>(k)];
  }
  // Boundary map C_degree -> C_{degree-1}; empty matrix outside range.
  const SparseIntMatrix& boundary(int degree) const;

  const std::vector<Int>& snf_diagonal(int degree) const;  // cached per degree
  long rank_z(int degree) const;
  long rank_mod(int degree, long long p) const;

 private:
  std::vector<long> dims_;
  std::vector<SparseIntMatrix> bnd_;  // bnd_[k] : degree k-1 -> degree k-2
  mutable std::vector<std::vector<Int>> snf_cache_;
  mutable std::vector<char> snf_done_;

  void finalize();  // sizes caches, checks d(d) = 0
};

HomologySummary reduced_homology_z(const ChainComplexData& cc);
HomologySummary reduced_homology_z(const SimplicialComplex& K);

FieldDims reduced_homology_dims(const ChainComplexData& cc, FieldSpec field);
FieldDims reduced_homology_dims(const SimplicialComplex& K, FieldSpec field);

// ---- field-level chain machinery -------------------------------------------------

template <class F>
FMat<F> boundary_matrix(const F& f, const ChainComplexData& cc, int degree) {
  return FMat<F>::from_sparse(f, cc.boundary(degree));
}

// Coboundary C^{degree} -> C^{degree+1} is the transpose of d_{degree+1}.
template <class F>
FMat<F> coboundary_matrix(const F& f, const ChainComplexData& cc, int degree) {
  return boundary_matrix(f, cc, degree + 1).transpose();
}

// Span of the coboundaries inside C^{degree}.
template <class F>
Subspace<F> coboundary_space(const F& f, const ChainComplexData& cc, int degree) {
  Subspace<F> S(f, static_cast<int>(cc.dim(degree)));
  if (cc.dim(degree) > 0 && cc.dim(degree - 1) > 0)
    S.insert_all(coboundary_matrix(f, cc, degree - 1).columns());
  return S;
}

// Cocycle representatives of a basis of reduced H^degree.
template <class F>
std::vector<FVec<F>> cocycle_basis(const F& f, const ChainComplexData& cc, int degree) {
  const int n_here = static_cast<int>(cc.dim(degree));
  if (n_here == 0) return {};
  std::vector<FVec<F>> cocycles;
  if (cc.dim(degree + 1) > 0) {
    cocycles = coboundary_matrix(f, cc, degree).kernel_basis();
  } else {
    for (int j = 0; j < n_here; ++j) {
      FVec<F> e(static_cast<std::size_t>(n_here), f.zero());
      e[static_cast<std::size_t>(j)] = f.one();
      cocycles.push_back(std::move(e));
    }
  }
  Subspace<F> span = coboundary_space(f, cc, degree);
  std::vector<FVec<F>> reps;
  for (auto& z : cocycles)
    if (span.insert(z)) reps.push_back(std::move(z));
  return reps;
}

// Cycle representatives of a basis of reduced H_degree.
template <class F>
std::vector<FVec<F>> cycle_basis_reps(const F& f, const ChainComplexData& cc, int degree) {
  const int n_here = static_cast<int>(cc.dim(degree));
  if (n_here == 0) return {};
  std::vector<FVec<F>> cycles;
  if (cc.dim(degree - 1) > 0) {
    cycles = boundary_matrix(f, cc, degree).kernel_basis();
  } else {
    for (int j = 0; j < n_here; ++j) {
      FVec<F> e(static_cast<std::size_t>(n_here), f.zero());
      e[static_cast<std::size_t>(j)] = f.one();
      cycles.push_back(std::move(e));
    }
  }
  Subspace<F> span(f, n_here);
  if (cc.dim(degree + 1) > 0) span.insert_all(boundary_matrix(f, cc, degree + 1).columns());
  std::vector<FVec<F>> reps;
  for (auto& z : cycles)
    if (span.insert(z)) reps.push_back(std::move(z));
  return reps;
}

}  // namespace maw
