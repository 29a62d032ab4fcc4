#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace maw {

// Vertex subsets as bitmasks.  Bit i encodes vertex i+1 of [n]; public I/O is
// 1-based throughout, internal vertex indices are 0-based.
using VSet = std::uint64_t;

inline int vs_size(VSet s) { return std::popcount(s); }
inline bool vs_contains(VSet s, int v) { return (s >> v) & 1u; }
inline VSet vs_full(int n) { return n >= 64 ? ~VSet(0) : ((VSet(1) << n) - 1); }

// Elements of s in increasing order, 0-based.
inline std::vector<int> vs_elements(VSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

inline VSet vs_from_elements(const std::vector<int>& elems) {
  VSet s = 0;
  for (int v : elems) s |= VSet(1) << v;
  return s;
}

// 0-based rank of v within s; v must be a member.
inline int vs_rank(VSet s, int v) {
  return std::popcount(s & ((VSet(1) << v) - 1));
}

// Number of pairs (a, b) in A x B with a > b; the parity is the shuffle sign
// of sorting the concatenation (sorted A, sorted B).
inline long vs_inversions(VSet a, VSet b) {
  long inv = 0;
  VSet rest = a;
  while (rest) {
    int v = std::countr_zero(rest);
    inv += std::popcount(b & ((VSet(1) << v) - 1));
    rest &= rest - 1;
  }
  return inv;
}

inline int shuffle_sign(VSet a, VSet b) { return (vs_inversions(a, b) & 1) ? -1 : 1; }

// Pack a subset of I into the low bits indexed by I's elements in order.
inline VSet vs_localize(VSet I, VSet ambient_subset) {
  VSet local = 0;
  int pos = 0;
  while (I) {
    int v = std::countr_zero(I);
    I &= I - 1;
    if (vs_contains(ambient_subset, v)) local |= VSet(1) << pos;
    ++pos;
  }
  return local;
}

// Inverse of vs_localize: spread low bits of `local` onto the elements of I.
inline VSet vs_spread(VSet I, VSet local) {
  VSet out = 0;
  int pos = 0;
  while (I) {
    int v = std::countr_zero(I);
    I &= I - 1;
    if (vs_contains(local, pos)) out |= VSet(1) << v;
    ++pos;
  }
  return out;
}

// All subsets of mask, ascending as integers.
inline std::vector<VSet> vs_subsets(VSet mask) {
  std::vector<VSet> out;
  out.reserve(std::size_t(1) << std::popcount(mask));
  VSet sub = 0;
  while (true) {
    out.push_back(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
  return out;
}

}  // namespace maw
