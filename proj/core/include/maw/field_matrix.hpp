#pragma once

#include <optional>
#include <vector>

#include "maw/fields.hpp"
#include "maw/snf.hpp"

namespace maw {

template <class F>
using FVec = std::vector<typename F::Elem>;

// Dense matrix over a field; just enough exact kernel/solve/span machinery
// for the (co)homology and Massey computations, which are all small.
template <class F>
struct FMat {
  const F* fld = nullptr;
  int rows = 0, cols = 0;
  std::vector<typename F::Elem> a;

  FMat() = default;
  FMat(const F& f, int r, int c)
      : fld(&f), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, f.zero()) {}

  typename F::Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const typename F::Elem& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static FMat from_sparse(const F& f, const SparseIntMatrix& M) {
    FMat out(f, M.rows, M.cols);
    for (int j = 0; j < M.cols; ++j)
      for (auto [i, v] : M.col_entries[static_cast<std::size_t>(j)])
        out.at(i, j) = f.from_int(v);
    return out;
  }

  FMat transpose() const {
    FMat out(*fld, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  FVec<F> apply(const FVec<F>& x) const {
    FVec<F> y(static_cast<std::size_t>(rows), fld->zero());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!fld->is_zero(at(i, j)) && !fld->is_zero(x[static_cast<std::size_t>(j)]))
          y[static_cast<std::size_t>(i)] =
              fld->add(y[static_cast<std::size_t>(i)],
                       fld->mul(at(i, j), x[static_cast<std::size_t>(j)]));
    return y;
  }

  std::vector<FVec<F>> columns() const {
    std::vector<FVec<F>> out;
    out.reserve(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
      FVec<F> v(static_cast<std::size_t>(rows));
      for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
      out.push_back(std::move(v));
    }
    return out;
  }

  static std::vector<FVec<F>> identity_columns(const F& f, int n) {
    std::vector<FVec<F>> out(static_cast<std::size_t>(n), FVec<F>(static_cast<std::size_t>(n), f.zero()));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = f.one();
    return out;
  }

  // Basis of the null space {x : A x = 0}.
  std::vector<FVec<F>> kernel_basis() const;

  // One solution of A x = b, if consistent.
  std::optional<FVec<F>> solve(const FVec<F>& b) const;
};

// Row space in reduced echelon form; supports incremental span queries.
template <class F>
class Subspace {
 public:
  Subspace(const F& f, int ambient) : fld_(&f), ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduce v against the current basis; the residual is zero iff v is in the span.
  FVec<F> reduce(FVec<F> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& coef = v[static_cast<std::size_t>(pivots_[k])];
      if (!fld_->is_zero(coef)) {
        auto c = coef;  // row is normalized to leading 1
        for (int j = 0; j < ambient_; ++j)
          if (!fld_->is_zero(rows_[k][static_cast<std::size_t>(j)]))
            v[static_cast<std::size_t>(j)] = fld_->sub(
                v[static_cast<std::size_t>(j)], fld_->mul(c, rows_[k][static_cast<std::size_t>(j)]));
      }
    }
    return v;
  }

  bool contains(const FVec<F>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!fld_->is_zero(x)) return false;
    return true;
  }

  // Returns true if v enlarged the span.
  bool insert(FVec<F> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!fld_->is_zero(v[static_cast<std::size_t>(j)])) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    auto inv = fld_->inv(v[static_cast<std::size_t>(piv)]);
    for (auto& x : v) x = fld_->mul(x, inv);
    // keep earlier rows reduced against the new one
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& c = rows_[k][static_cast<std::size_t>(piv)];
      if (!fld_->is_zero(c)) {
        auto cc = c;
        for (int j = 0; j < ambient_; ++j)
          rows_[k][static_cast<std::size_t>(j)] =
              fld_->sub(rows_[k][static_cast<std::size_t>(j)],
                        fld_->mul(cc, v[static_cast<std::size_t>(j)]));
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  void insert_all(const std::vector<FVec<F>>& vs) {
    for (const auto& v : vs) insert(v);
  }

 private:
  const F* fld_;
  int ambient_;
  std::vector<FVec<F>> rows_;
  std::vector<int> pivots_;
};

template <class F>
std::vector<FVec<F>> FMat<F>::kernel_basis() const {
  // row reduce a working copy and back-substitute the free columns
  FMat R = *this;
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
  int rank = 0;
  for (int j = 0; j < cols && rank < rows; ++j) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!fld->is_zero(R.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < cols; ++k) std::swap(R.at(piv, k), R.at(rank, k));
    auto inv = fld->inv(R.at(rank, j));
    for (int k = 0; k < cols; ++k) R.at(rank, k) = fld->mul(R.at(rank, k), inv);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || fld->is_zero(R.at(i, j))) continue;
      auto c = R.at(i, j);
      for (int k = 0; k < cols; ++k)
        R.at(i, k) = fld->sub(R.at(i, k), fld->mul(c, R.at(rank, k)));
    }
    pivot_col_of_row.push_back(j);
    pivot_row_of_col[static_cast<std::size_t>(j)] = rank;
    ++rank;
  }
  std::vector<FVec<F>> basis;
  for (int j = 0; j < cols; ++j) {
    if (pivot_row_of_col[static_cast<std::size_t>(j)] >= 0) continue;
    FVec<F> v(static_cast<std::size_t>(cols), fld->zero());
    v[static_cast<std::size_t>(j)] = fld->one();
    for (int r = 0; r < rank; ++r) {
      int pc = pivot_col_of_row[static_cast<std::size_t>(r)];
      v[static_cast<std::size_t>(pc)] = fld->neg(R.at(r, j));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<FVec<F>> FMat<F>::solve(const FVec<F>& b) const {
  FMat R(*fld, rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) R.at(i, j) = at(i, j);
    R.at(i, cols) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int j = 0; j < cols && rank < rows; ++j) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!fld->is_zero(R.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k <= cols; ++k) std::swap(R.at(piv, k), R.at(rank, k));
    auto inv = fld->inv(R.at(rank, j));
    for (int k = 0; k <= cols; ++k) R.at(rank, k) = fld->mul(R.at(rank, k), inv);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || fld->is_zero(R.at(i, j))) continue;
      auto c = R.at(i, j);
      for (int k = 0; k <= cols; ++k)
        R.at(i, k) = fld->sub(R.at(i, k), fld->mul(c, R.at(rank, k)));
    }
    pivot_col_of_row.push_back(j);
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (!fld->is_zero(R.at(i, cols))) return std::nullopt;  // inconsistent
  FVec<F> x(static_cast<std::size_t>(cols), fld->zero());
  for (int r = 0; r < rank; ++r)
    x[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(r)])] = R.at(r, cols);
  return x;
}

}  // namespace maw
