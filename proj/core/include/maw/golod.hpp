#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maw/hochster.hpp"
#include "maw/simplicial_complex.hpp"

namespace maw {

struct GolodVerdict {
  FieldSpec field;
  bool products_vanish = false;
  std::optional<bool> massey_all_vanish;  // unset when products already fail
  long classes = 0;                       // positive-degree classes, model side
  long pairs_checked = 0;
  long triples_checked = 0;
  std::string label;    // "not-Golod" or "Golod-up-to-triple-Massey"
  std::string witness;  // first failing product or bracket, empty when none
};

// Dual-route check: product scan on the subset-graded side, exhaustive triple
// brackets on the model side.  Rejects complexes with unused vertices.
GolodVerdict classify_golod(const SimplicialComplex& K, FieldSpec field, int max_n = 12);

struct ExtractibleReport {
  FieldSpec field;
  bool passes = false;
  std::vector<int> failing_degrees;
  std::vector<long> homology_dims;  // reduced dims of K by degree, index 0 is degree -1
};

// Necessary condition for splitting off the vertex-deletion wedge: every
// homology class of K must be hit by boundaries together with cycles pushed
// forward from the deletions K minus one vertex.
ExtractibleReport extractible_necessary(const SimplicialComplex& K, FieldSpec field);

struct PoincareSeries {
  int n = 0;
  std::vector<long long> numerator;    // coefficients of (1+t)^n
  std::vector<long long> denominator;  // 1 - sum of class counts t^{|I|-p}
  std::string to_string() const;
};

// Rational form of the face-ring homotopy Lie series valid in the Golod case.
PoincareSeries golod_poincare_series(const SimplicialComplex& K, FieldSpec field,
                                     int max_n = 12);

// All isomorphism classes of complexes on exactly n vertices without unused
// vertices, deterministically ordered.  Guarded at n <= 5.
std::vector<SimplicialComplex> catalog_complexes(int n);

// Same, restricted to floor(n/2)-neighbourly complexes.  Guarded at n <= 6.
std::vector<SimplicialComplex> neighbourly_catalog(int n);

}  // namespace maw
