#pragma once

#include <string>
#include <vector>

#include "maw/numbers.hpp"
#include "maw/vertex_set.hpp"

namespace maw {

// Finite abstract simplicial complex on vertex positions 0..n-1, stored by
// its inclusion-maximal faces.  Downward closure is implicit in the facet
// representation, so it holds after every operation by construction.  The
// void complex (no faces at all) is distinct from {emptyset}.
//
// `labels` carries the original 1-based vertex names through restrictions and
// joins; freshly constructed complexes are labeled 1..n.
class SimplicialComplex {
 public:
  SimplicialComplex() : n_(0), void_(false) {}

  static SimplicialComplex void_complex(int n);
  static SimplicialComplex empty_complex(int n);  // {emptyset}, every vertex ghost
  static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets_1based);
  static SimplicialComplex from_facet_masks(int n, std::vector<VSet> facets);
  static SimplicialComplex simplex(int n);
  // All subsets of [n] of size <= s (s >= 0); the (s-1)-skeleton of simplex(n).
  static SimplicialComplex skeleton(int n, int s);

  int n() const { return n_; }
  bool is_void() const { return void_; }
  const std::vector<VSet>& facets() const { return facets_; }
  const std::vector<int>& labels() const { return labels_; }

  bool has_face(VSet s) const;
  int dim() const;  // dim of {emptyset} is -1, dim of the void complex is -2
  VSet vertex_support() const;
  VSet ghost_vertices() const { return vs_full(n_) & ~vertex_support(); }
  bool has_ghost_vertices() const { return ghost_vertices() != 0; }

  // f[s] = number of faces with s vertices (f[0] counts the empty face).
  std::vector<long> f_vector() const;
  long face_count() const;

  // Full face family grouped by size, ascending masks within a size.
  // Materialization is guarded at n <= 24.
  std::vector<std::vector<VSet>> faces_by_size() const;
  std::vector<VSet> faces_of_size(int s) const;

  // Full subcomplex on the positions in I (lvalue mask over 0..n-1).
  SimplicialComplex restriction(VSet I) const;
  SimplicialComplex restriction_elems(const std::vector<int>& verts_1based) const;
  SimplicialComplex deletion(int v_1based) const;

  bool is_m_neighbourly(int m) const;
  bool is_neighbourly() const { return is_m_neighbourly(n_ / 2); }

  // Lexicographically minimal facet list over all vertex permutations.
  // Ignores labels.  Guarded at n <= 8.
  std::vector<VSet> canonical_facets() const;
  std::string canonical_key() const;
  bool isomorphic_to(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && void_ == o.void_ && facets_ == o.facets_;
  }

  // Position of the vertex with 1-based label, -1 if absent.
  int position_of_label(int label) const;

  friend SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

 private:
  int n_;
  bool void_;
  std::vector<VSet> facets_;  // ascending as integers; empty list means {emptyset}
  std::vector<int> labels_;   // strictly increasing 1-based names

  void set_identity_labels();
};

// Join K * L; label sets must be disjoint.  Vertices are merged in label
// order and faces are all unions of a face of K with a face of L.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

// Vertex map between complexes; may collapse vertices.  `image[p]` is the
// target position of source position p.
struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<int> image;

  VSet face_image(VSet s) const;
  bool valid() const;  // every face maps to a face
  SimplicialMap then(const SimplicialMap& g) const;
};

// Canonical inclusion K_{I u J} -> K_I * K_J for disjoint non-empty I, J
// (position masks over K's vertices); identity on vertex labels.
SimplicialMap iota_inclusion(const SimplicialComplex& K, VSet I, VSet J);

}  // namespace maw
