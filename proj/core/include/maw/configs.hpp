#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maw/numbers.hpp"
#include "maw/simplicial_complex.hpp"

namespace maw {

// Symbol class of an interval coordinate: the basepoint end, the open
// interior, or the free end.
enum class CoordClass { MinusOne, Interior, PlusOne };

// Label of one particle: which coordinate summand it sits in (1-based) and
// the symbol class of its value.
struct ConfigLabel {
  int index = 0;
  CoordClass cls = CoordClass::Interior;

  bool operator==(const ConfigLabel&) const = default;
  auto operator<=>(const ConfigLabel&) const = default;
};

std::string to_string(const ConfigLabel& l);

// A label multiset is represented by a point of the k-th filtration iff the
// indices are distinct, the interior indices form a face, and at most k
// labels avoid the basepoint end.
bool is_represented(const std::vector<ConfigLabel>& labels, const SimplicialComplex& K,
                    int k);

using RepresentedOracle =
    std::function<bool(const std::vector<ConfigLabel>&, const SimplicialComplex&, int)>;

struct PropertyACheck {
  bool holds = false;
  long multisets_checked = 0;
  std::optional<std::vector<ConfigLabel>> witness;  // first multiset where the
                                                    // two filtrations disagree
};

// Filtration-independence of representability: every size-m multiset is
// represented in the k-th filtration iff it is in the m-th.  The oracle is
// injectable so a corrupted one can be shown to fail.
PropertyACheck property_A_check(const SimplicialComplex& K, int m, int k,
                                const RepresentedOracle& oracle = {});

// All length-n compositions of m, largest first coordinate first.
std::vector<std::vector<int>> mn_partitions(int m, int n);

// One particle of a labeled configuration; the class is Interior unless
// stated otherwise and only matters for representability questions.
struct Particle {
  int summand = 1;  // 1-based
  Rat position;
};

// Ranks 1..m along the order "smaller summand first, then smaller position";
// two particles of one summand at one position violate the configuration
// invariant.
std::vector<int> particle_order(const std::vector<Particle>& particles);

// Subset order used by the embedding: encode a subset by the descending list
// of its ranks and compare lexicographically; equivalently compare the rank
// bitmasks as integers.
bool subset_before_eq(VSet rank_mask_a, VSet rank_mask_b);

// Exact embedding value: sum over all subsets T preceding S of the product of
// the weights of T's particles.  Weights are per-particle and must be
// positive; S is a mask over the input particle positions.
Rat eta(const std::vector<Particle>& particles, const std::vector<Rat>& weights, VSet S);

}  // namespace maw
