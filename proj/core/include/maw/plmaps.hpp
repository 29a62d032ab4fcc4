#pragma once

#include <functional>
#include <string>
#include <vector>

#include "maw/numbers.hpp"
#include "maw/partitions.hpp"
#include "maw/simplicial_complex.hpp"

namespace maw {

// Point of the n-fold smash of intervals [-1,1] with basepoint -1; a point
// with any coordinate equal to -1 collapses to the basepoint, which carries no
// coordinate data.
struct SmashPoint {
  int n = 0;
  bool basepoint = false;
  std::vector<Rat> x;  // size n, entries in (-1,1] when not the basepoint

  static SmashPoint make(std::vector<Rat> coords);
  static SmashPoint base(int n);

  VSet support_ne1() const;  // coordinates different from 1
  bool operator==(const SmashPoint&) const = default;
  std::string to_string() const;
};

// Barycentric point of a simplex on n vertices.
struct BarycentricPoint {
  int n = 0;
  std::vector<Rat> z;

  static BarycentricPoint make(std::vector<Rat> coords);
  VSet support() const;
  bool operator==(const BarycentricPoint&) const = default;
  std::string to_string() const;
};

// Interval model of the suspension coordinate plus a simplex point; the chart
// with maximal z_i sends z_j to t + (1-t)(z_i - z_j)/z_i, so coordinates
// outside the support land exactly at 1.
SmashPoint h_eval(const Rat& t, const BarycentricPoint& z);

struct HInv {
  Rat t;
  BarycentricPoint z;
};

// Inverse of h_eval away from the two exceptional points; the basepoint maps
// to t = -1 and the all-ones point to t = 1, both with the barycenter.
HInv h_inv_eval(const SmashPoint& x);

// True iff x collapses into the block-wise polyhedral subspace: for each
// block I of the partition, the non-1 coordinates inside I form a face of L.
bool smash_membership(const SmashPoint& x, const SimplicialComplex& L,
                      const OrderedPartition& blocks);

// ---- the suspension-to-smash comparison maps ------------------------------------

struct PhiResult {
  bool basepoint = false;
  Rat s;                    // 2*beta - 1
  std::vector<Rat> y;       // (t_1, ..., t_{n-1}, 0)
  OrderedPartition blocks;  // [n] partitioned by the y values
  bool member = false;      // supp(z) meets every block in a face
};

// Weak comparison map on the n-fold suspension of |K|: input parameters
// t_1..t_{n-1}, inner suspension parameter t, and a barycentric point of |K|.
// Basepoint inputs (any |t_i| = 1, t = -1) and beta = 0 collapse.
PhiResult phi_eval(const SimplicialComplex& K, const std::vector<Rat>& ts, const Rat& t,
                   const BarycentricPoint& z);

struct PsiResult {
  SmashPoint out;
  OrderedPartition blocks;  // [n] partitioned by (t_1..t_{n-1}, 0)
  bool member = false;      // smash_membership of out w.r.t. blocks
  std::vector<Rat> alphas;
  Rat beta;
};

// Coordinate-wise squeeze for neighbourly K: coordinate i maps through
// (1-2*alpha_i*beta)(x_i+1)-1 when alpha_i < 1/2 and (1-beta)(x_i+1)-1
// otherwise, where alpha_i is the smallest sum of floor(n/2) distances
// |t_i - t_j| and beta = max |t_i|.
PsiResult psi_neighbourly_eval(const SimplicialComplex& K, const std::vector<Rat>& ts,
                               const SmashPoint& x);

using SmashEvaluator =
    std::function<PsiResult(const std::vector<Rat>&, const SmashPoint&)>;

struct PsiDisjointResult {
  SmashPoint out;           // n+1 coordinates: inner image plus the new one
  OrderedPartition blocks;  // [n+1] partitioned by (t_1..t_{n-1}, 0, s)
  bool member = false;
  Rat y;  // coordinate of the added vertex
};

// Extension of an inner evaluator to K plus one disjoint vertex; the added
// coordinate is a piecewise-linear function of the extra parameter s with
// plateau 1 between alpha = min(t,0) and beta = max(t,0).
PsiDisjointResult psi_disjoint_vertex_eval(const SimplicialComplex& K,
                                           const SmashEvaluator& inner,
                                           const std::vector<Rat>& ts, const Rat& s,
                                           const SmashPoint& x);

// Convenience wrapper using the neighbourly evaluator as the inner map.
PsiDisjointResult psi_disjoint_vertex_eval(const SimplicialComplex& K,
                                           const std::vector<Rat>& ts, const Rat& s,
                                           const SmashPoint& x);

// One coordinate of the straightening homotopy on [0,1] with S^0 = {0,1}:
// time 0 is the identity and time 1 absorbs [0,1/4] into 0 and [3/4,1] into 1.
Rat faithful_homotopy_eval(const Rat& t, const Rat& s);

// The same homotopy transported to the [-1,1] interval convention.
Rat faithful_homotopy_eval_pm(const Rat& t, const Rat& s);

}  // namespace maw
