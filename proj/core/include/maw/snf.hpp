#pragma once

#include <utility>
#include <vector>

#include "maw/numbers.hpp"

namespace maw {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& other) const;
  bool operator==(const IntMatrix& o) const = default;
};

// Columns of a sparse integer matrix; entries are (row, value) with value != 0.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> col_entries;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), col_entries(static_cast<std::size_t>(c)) {}
  IntMatrix dense() const;
};

struct SnfResult {
  std::vector<Int> diagonal;  // length min(rows, cols); d_i >= 0 and d_i | d_{i+1}
  IntMatrix U, V;             // M = U * D * V with |det U| = |det V| = 1
  bool with_transforms = false;

  long rank() const {
    long r = 0;
    for (const Int& d : diagonal)
      if (d != 0) ++r;
    return r;
  }
  long rank_mod(long long p) const {
    long r = 0;
    for (const Int& d : diagonal)
      if (d != 0 && d % p != 0) ++r;
    return r;
  }
  std::vector<Int> torsion() const {  // diagonal entries > 1
    std::vector<Int> t;
    for (const Int& d : diagonal)
      if (d > 1) t.push_back(d);
    return t;
  }
};

// Exact Smith normal form over Z with minimal-absolute-value pivoting.
// Entries are arbitrary precision; an int64 fast path is used while no
// intermediate value overflows.
SnfResult smith_normal_form(const IntMatrix& M, bool with_transforms = true);

// Diagonal-only SNF for large sparse matrices: unimodular unit-pivot
// elimination (Markowitz-style fill minimization) peels off diagonal 1s, the
// small remainder goes through the dense routine.  Same diagonal invariants
// as smith_normal_form.
std::vector<Int> snf_diagonal_sparse(const SparseIntMatrix& M);

}  // namespace maw
