#pragma once

#include <string>
#include <vector>

#include "maw/homology.hpp"
#include "maw/numbers.hpp"
#include "maw/simplicial_complex.hpp"

namespace maw {

// Ordered set partition (B_1, ..., B_m) of [n]; blocks are disjoint nonempty
// masks covering [n].
struct OrderedPartition {
  int n = 0;
  std::vector<VSet> blocks;

  int length() const { return static_cast<int>(blocks.size()); }
  bool valid() const;
  std::string to_string() const;
  bool operator==(const OrderedPartition&) const = default;
  bool operator<(const OrderedPartition& o) const {
    return std::make_pair(n, blocks) < std::make_pair(o.n, o.blocks);
  }

  // Nested prefix unions B_1, B_1|B_2, ..., all but the last; these are the
  // vertices (proper nonempty subsets) spanned by the partition.
  std::vector<VSet> prefixes() const;
  static OrderedPartition from_prefixes(int n, const std::vector<VSet>& chain);
};

// Values sharing a key end up in one block; blocks are ordered by ascending
// value.  `opaque_id >= 0` marks a symbolic value that only compares equal to
// itself; ties between distinct symbols or between a symbol and its rational
// approximation are resolved by (approx, opaqueness, id).
struct SeqValue {
  Rat approx;
  long opaque_id = -1;

  bool is_opaque() const { return opaque_id >= 0; }
  static SeqValue exact(Rat v) { return SeqValue{std::move(v), -1}; }
  static SeqValue opaque(Rat approx, long id) { return SeqValue{std::move(approx), id}; }

  friend bool operator<(const SeqValue& a, const SeqValue& b) {
    if (a.approx != b.approx) return a.approx < b.approx;
    if (a.is_opaque() != b.is_opaque()) return !a.is_opaque();
    return a.opaque_id < b.opaque_id;
  }
  friend bool operator==(const SeqValue& a, const SeqValue& b) {
    return a.approx == b.approx && a.opaque_id == b.opaque_id;
  }
};

OrderedPartition ordered_partition_from_sequence(const std::vector<SeqValue>& vals);
OrderedPartition ordered_partition_from_sequence(const std::vector<Rat>& vals);

// Merge blocks i and i+1 (1-based), shortening the partition by one.
OrderedPartition face_map(const OrderedPartition& P, int i);

// The simplicial complex whose faces are ordered partitions of [n] with at
// least two blocks (a partition of length m spans m-1 prefix vertices); the
// trivial partition is the empty face.  Vertices are the 2^n - 2 proper
// nonempty subsets, identified by mask value - 1.
struct PermutohedralComplex {
  int n = 0;
  std::vector<std::vector<OrderedPartition>> faces_by_len;  // index m = 1..n

  long vertex_count() const { return (1L << n) - 2; }
  std::vector<long> counts_by_len() const;

  ChainComplexData chain_complex() const;
  SimplicialComplex to_simplicial() const;  // guarded at n <= 6

  static std::vector<int> vertex_ids(const OrderedPartition& P);
};

PermutohedralComplex build_Kn(int n);  // guarded at 2 <= n <= 7

struct SphereCheck {
  int n = 0;
  bool homology_ok = false;
  bool pseudomanifold_ok = false;
  bool ok = false;
  HomologySummary homology;
  std::vector<long> counts_by_len;
  long top_count = 0;
};

// Reduced integer homology of a (n-2)-sphere, ridge-in-two-facets count, and
// the face census.
SphereCheck verify_sphere(int n);

// Point of the permutohedral complex in barycentric coordinates: a carrier
// partition of length m and weights on its m-1 prefix vertices.
struct KnPoint {
  OrderedPartition carrier;
  std::vector<Rat> weights;

  bool valid() const;
};

// Merge away zero-weight vertices; the result has strictly positive weights.
KnPoint canonicalize(const KnPoint& p);

// Radial coordinates: component j is (t/beta) * (t_j - t_n) where t_j is the
// total weight of carrier prefixes avoiding j and beta normalizes the largest
// magnitude to |t|.
std::vector<Rat> tau(const KnPoint& gamma, const Rat& t);

// Inverse on the image for t > 0; recovers the canonicalized point from the
// coordinate vector (y_1, ..., y_{n-1}).
KnPoint tau_inv(const std::vector<Rat>& coords);

}  // namespace maw
