#include "maw/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>

namespace maw {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  IntMatrix out(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols; ++j) {
        const Int& y = other.at(k, j);
        if (y != 0) out.at(i, j) += x * y;
      }
    }
  return out;
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix M(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (auto [i, v] : col_entries[static_cast<std::size_t>(j)]) M.at(i, j) = v;
  return M;
}

namespace {

struct Int64Overflow {};

inline long long chk_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline long long chk_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline long long chk_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}

template <class T>
T abs_val(const T& x) {
  return x < 0 ? T(-x) : x;
}

// a -= q*b, overflow-checked in the int64 instantiation
inline void sub_mul(long long& a, long long q, long long b) { a = chk_sub(a, chk_mul(q, b)); }
inline void sub_mul(Int& a, const Int& q, const Int& b) { a -= q * b; }
inline void add_to(long long& a, long long b) { a = chk_add(a, b); }
inline void add_to(Int& a, const Int& b) { a += b; }

template <class T>
struct SnfWorker {
  int r, c;
  bool track;
  std::vector<T> A, U, V;

  SnfWorker(const IntMatrix& M, bool with_transforms)
      : r(M.rows), c(M.cols), track(with_transforms) {
    A.resize(static_cast<std::size_t>(r) * c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        if constexpr (std::is_same_v<T, long long>) {
          if (M.at(i, j) < std::numeric_limits<long long>::min() ||
              M.at(i, j) > std::numeric_limits<long long>::max())
            throw Int64Overflow{};
          a(i, j) = static_cast<long long>(M.at(i, j));
        } else {
          a(i, j) = M.at(i, j);
        }
      }
    if (track) {
      U.assign(static_cast<std::size_t>(r) * r, T(0));
      V.assign(static_cast<std::size_t>(c) * c, T(0));
      for (int i = 0; i < r; ++i) u(i, i) = 1;
      for (int j = 0; j < c; ++j) v(j, j) = 1;
    }
  }

  T& a(int i, int j) { return A[static_cast<std::size_t>(i) * c + j]; }
  T& u(int i, int j) { return U[static_cast<std::size_t>(i) * r + j]; }
  T& v(int i, int j) { return V[static_cast<std::size_t>(i) * c + j]; }

  // A <- R*A updates U <- U*R^{-1}; A <- A*C updates V <- C^{-1}*V.
  void row_swap(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c; ++k) std::swap(a(i, k), a(j, k));
    if (track)
      for (int k = 0; k < r; ++k) std::swap(u(k, i), u(k, j));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < r; ++k) std::swap(a(k, i), a(k, j));
    if (track)
      for (int k = 0; k < c; ++k) std::swap(v(i, k), v(j, k));
  }
  void row_submul(int i, int j, const T& q) {  // row_i -= q*row_j
    for (int k = 0; k < c; ++k)
      if (a(j, k) != 0) sub_mul(a(i, k), q, a(j, k));
    if (track)
      for (int k = 0; k < r; ++k)
        if (u(k, i) != 0) {
          T t = u(k, i);
          t = T(0) - t;
          sub_mul(u(k, j), t, q);  // col_j += q*col_i
        }
  }
  void col_submul(int i, int j, const T& q) {  // col_i -= q*col_j
    for (int k = 0; k < r; ++k)
      if (a(k, j) != 0) sub_mul(a(k, i), q, a(k, j));
    if (track)
      for (int k = 0; k < c; ++k)
        if (v(i, k) != 0) {
          T t = v(i, k);
          t = T(0) - t;
          sub_mul(v(j, k), t, q);  // row_j += q*row_i
        }
  }
  void row_add(int dst, int src) {  // row_dst += row_src
    for (int k = 0; k < c; ++k)
      if (a(src, k) != 0) add_to(a(dst, k), a(src, k));
    if (track)
      for (int k = 0; k < r; ++k)
        if (u(k, dst) != 0) sub_mul(u(k, src), T(1), u(k, dst));  // col_src -= col_dst
  }
  void row_negate(int i) {
    for (int k = 0; k < c; ++k) a(i, k) = T(0) - a(i, k);
    if (track)
      for (int k = 0; k < r; ++k) u(k, i) = T(0) - u(k, i);
  }

  bool find_min_pivot(int s, int& pi, int& pj) {
    bool found = false;
    T best{};
    for (int i = s; i < r; ++i)
      for (int j = s; j < c; ++j)
        if (a(i, j) != 0) {
          T av = abs_val(a(i, j));
          if (!found || av < best) {
            best = av;
            pi = i;
            pj = j;
            found = true;
            if (best == 1) return true;
          }
        }
    return found;
  }

  SnfResult run() {
    const int m = std::min(r, c);
    for (int s = 0; s < m; ++s) {
      int pi, pj;
      if (!find_min_pivot(s, pi, pj)) break;
      row_swap(s, pi);
      col_swap(s, pj);
      while (true) {
        bool changed = false;
        for (int i = s + 1; i < r; ++i)
          if (a(i, s) != 0) {
            T q = a(i, s) / a(s, s);
            if (q != 0) row_submul(i, s, q);
            if (a(i, s) != 0) changed = true;
          }
        for (int j = s + 1; j < c; ++j)
          if (a(s, j) != 0) {
            T q = a(s, j) / a(s, s);
            if (q != 0) col_submul(j, s, q);
            if (a(s, j) != 0) changed = true;
          }
        if (changed) {
          // a strictly smaller remainder exists; re-pick the minimal pivot
          if (!find_min_pivot(s, pi, pj)) break;
          row_swap(s, pi);
          col_swap(s, pj);
          continue;
        }
        // row and column are clear; enforce divisibility of the rest
        bool fixed = false;
        for (int i = s + 1; i < r && !fixed; ++i)
          for (int j = s + 1; j < c && !fixed; ++j)
            if (a(i, j) % a(s, s) != 0) {
              row_add(s, i);
              fixed = true;
            }
        if (!fixed) break;
      }
      if (a(s, s) < 0) row_negate(s);
    }
    SnfResult out;
    out.diagonal.resize(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) out.diagonal[static_cast<std::size_t>(s)] = Int(a(s, s));
    out.with_transforms = track;
    if (track) {
      out.U = IntMatrix(r, r);
      out.V = IntMatrix(c, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out.U.at(i, j) = Int(u(i, j));
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) out.V.at(i, j) = Int(v(i, j));
    }
    return out;
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& M, bool with_transforms) {
  try {
    SnfWorker<long long> w(M, with_transforms);
    return w.run();
  } catch (const Int64Overflow&) {
    SnfWorker<Int> w(M, with_transforms);
    return w.run();
  }
}

namespace {

// Sparse unimodular elimination of +-1 pivots; returns the count of unit
// pivots peeled off and the dense remainder.
struct SparseEliminator {
  int rows, cols;
  std::vector<std::map<int, long long>> col_of;
  std::vector<std::set<int>> row_cols;
  std::vector<char> row_alive, col_alive;
  long units = 0;

  explicit SparseEliminator(const SparseIntMatrix& M)
      : rows(M.rows),
        cols(M.cols),
        col_of(static_cast<std::size_t>(M.cols)),
        row_cols(static_cast<std::size_t>(M.rows)),
        row_alive(static_cast<std::size_t>(M.rows), 1),
        col_alive(static_cast<std::size_t>(M.cols), 1) {
    for (int j = 0; j < cols; ++j)
      for (auto [i, v] : M.col_entries[static_cast<std::size_t>(j)])
        if (v != 0) {
          col_of[static_cast<std::size_t>(j)][i] = v;
          row_cols[static_cast<std::size_t>(i)].insert(j);
        }
  }

  // Best unit entry by Markowitz fill score, or {-1,-1}.
  std::pair<int, int> pick_pivot() {
    long best_score = -1;
    std::pair<int, int> best{-1, -1};
    for (int j = 0; j < cols; ++j) {
      if (!col_alive[static_cast<std::size_t>(j)]) continue;
      const auto& colm = col_of[static_cast<std::size_t>(j)];
      long cn = static_cast<long>(colm.size());
      if (cn == 0) continue;
      for (const auto& [i, v] : colm) {
        if (v != 1 && v != -1) continue;
        long rn = static_cast<long>(row_cols[static_cast<std::size_t>(i)].size());
        long score = (cn - 1) * (rn - 1);
        if (best_score < 0 || score < best_score) {
          best_score = score;
          best = {i, j};
          if (score == 0) return best;
        }
      }
    }
    return best;
  }

  void eliminate(int pr, int pc) {
    long long pv = col_of[static_cast<std::size_t>(pc)].at(pr);  // +-1
    std::vector<int> touched(row_cols[static_cast<std::size_t>(pr)].begin(),
                             row_cols[static_cast<std::size_t>(pr)].end());
    for (int j : touched) {
      if (j == pc) continue;
      auto& target = col_of[static_cast<std::size_t>(j)];
      long long w = target.at(pr);
      long long q = chk_mul(w, pv);  // w / pv for unit pv
      // col_j -= q * col_pc
      for (const auto& [i, v] : col_of[static_cast<std::size_t>(pc)]) {
        auto it = target.find(i);
        long long nv = chk_sub(it == target.end() ? 0 : it->second, chk_mul(q, v));
        if (nv == 0) {
          if (it != target.end()) {
            target.erase(it);
            row_cols[static_cast<std::size_t>(i)].erase(j);
          }
        } else {
          if (it == target.end()) {
            target.emplace(i, nv);
            row_cols[static_cast<std::size_t>(i)].insert(j);
          } else {
            it->second = nv;
          }
        }
      }
    }
    // retire pivot row and column
    for (const auto& [i, v] : col_of[static_cast<std::size_t>(pc)])
      row_cols[static_cast<std::size_t>(i)].erase(pc);
    col_of[static_cast<std::size_t>(pc)].clear();
    for (int j : row_cols[static_cast<std::size_t>(pr)]) {
      col_of[static_cast<std::size_t>(j)].erase(pr);
    }
    row_cols[static_cast<std::size_t>(pr)].clear();
    row_alive[static_cast<std::size_t>(pr)] = 0;
    col_alive[static_cast<std::size_t>(pc)] = 0;
    ++units;
  }

  IntMatrix remainder() const {
    std::vector<int> rmap(static_cast<std::size_t>(rows), -1), cmap(static_cast<std::size_t>(cols), -1);
    int nr = 0, nc = 0;
    for (int i = 0; i < rows; ++i)
      if (row_alive[static_cast<std::size_t>(i)]) rmap[static_cast<std::size_t>(i)] = nr++;
    for (int j = 0; j < cols; ++j)
      if (col_alive[static_cast<std::size_t>(j)]) cmap[static_cast<std::size_t>(j)] = nc++;
    IntMatrix M(nr, nc);
    for (int j = 0; j < cols; ++j) {
      if (!col_alive[static_cast<std::size_t>(j)]) continue;
      for (const auto& [i, v] : col_of[static_cast<std::size_t>(j)])
        M.at(rmap[static_cast<std::size_t>(i)], cmap[static_cast<std::size_t>(j)]) = v;
    }
    return M;
  }
};

}  // namespace

std::vector<Int> snf_diagonal_sparse(const SparseIntMatrix& M) {
  SparseEliminator elim(M);
  IntMatrix rem;
  try {
    while (true) {
      auto [pr, pc] = elim.pick_pivot();
      if (pr < 0) break;
      elim.eliminate(pr, pc);
    }
    rem = elim.remainder();
  } catch (const Int64Overflow&) {
    rem = elim.remainder();  // ops so far were unimodular; finish densely
  }
  SnfResult tail = smith_normal_form(rem, false);
  std::vector<Int> diag;
  const std::size_t total = static_cast<std::size_t>(std::min(M.rows, M.cols));
  diag.reserve(total);
  for (long k = 0; k < elim.units; ++k) diag.emplace_back(1);
  for (const Int& d : tail.diagonal) diag.push_back(d);
  diag.resize(total, Int(0));
  return diag;
}

}  // namespace maw
