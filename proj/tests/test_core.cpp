#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "maw/rng.hpp"
#include "maw/simplicial_complex.hpp"
#include "maw/vertex_set.hpp"

using namespace maw;

TEST_CASE("vertex set basics") {
  CHECK(vs_size(0) == 0);
  CHECK(vs_size(0b1011) == 3);
  CHECK(vs_full(3) == 0b111);
  CHECK(vs_elements(0b1010) == std::vector<int>{1, 3});
  CHECK(vs_from_elements({0, 2}) == 0b101);
  CHECK(vs_rank(0b1110, 3) == 2);
  CHECK(vs_subsets(0b101) == std::vector<VSet>{0b000, 0b001, 0b100, 0b101});
}

TEST_CASE("inversion count against direct enumeration") {
  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    VSet a = rng.next_below(256), b = rng.next_below(256);
    b &= ~a;
    long inv = 0;
    for (int x : vs_elements(a))
      for (int y : vs_elements(b))
        if (x > y) ++inv;
    CHECK(vs_inversions(a, b) == inv);
    CHECK(shuffle_sign(a, b) == ((inv % 2) ? -1 : 1));
    // swapping the blocks flips the sign by |a||b| minus the inversions
    long cross = static_cast<long>(vs_size(a)) * vs_size(b);
    CHECK(vs_inversions(b, a) == cross - inv);
  }
}

TEST_CASE("localize and spread are inverse over subsets of the ambient mask") {
  Rng rng(12);
  for (int it = 0; it < 200; ++it) {
    VSet I = rng.next_below(1 << 10);
    VSet sub = rng.next_below(1 << 10) & I;
    VSet local = vs_localize(I, sub);
    CHECK(vs_size(local) == vs_size(sub));
    CHECK(local < (VSet(1) << vs_size(I)));
    CHECK(vs_spread(I, local) == sub);
  }
  CHECK(vs_localize(0b1010, 0b1000) == 0b10);
  CHECK(vs_spread(0b1010, 0b10) == 0b1000);
}

TEST_CASE("complex construction and face queries") {
  auto K = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(K.n() == 4);
  CHECK(K.has_face(0));
  CHECK(K.has_face(0b0011));
  CHECK_FALSE(K.has_face(0b0101));  // diagonal of the square
  CHECK(K.dim() == 1);
  CHECK(K.f_vector() == std::vector<long>{1, 4, 4});
  CHECK(K.vertex_support() == 0b1111);
  CHECK_FALSE(K.has_ghost_vertices());

  auto empty = SimplicialComplex::empty_complex(2);
  CHECK(empty.dim() == -1);
  CHECK(empty.has_face(0));
  CHECK_FALSE(empty.has_face(1));
  CHECK(empty.ghost_vertices() == 0b11);

  auto V = SimplicialComplex::void_complex(2);
  CHECK(V.is_void());
  CHECK_FALSE(V.has_face(0));
  CHECK(V.dim() == -2);
}

TEST_CASE("restriction composes by intersecting masks") {
  auto K = SimplicialComplex::from_facets(5, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                                              {2, 3, 4}, {2, 3, 5}, {4, 5}});
  Rng rng(5);
  for (int it = 0; it < 100; ++it) {
    VSet I = rng.next_below(32);
    VSet Jlocal = rng.next_below(VSet(1) << vs_size(I));
    auto KI = K.restriction(I);
    auto KIJ = KI.restriction(Jlocal);
    auto direct = K.restriction(vs_spread(I, Jlocal));
    CHECK(KIJ.facets() == direct.facets());
    CHECK(KIJ.labels() == direct.labels());
  }
}

TEST_CASE("restriction keeps original labels") {
  auto K = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto R = K.restriction(0b1010);  // vertices 2 and 4
  CHECK(R.n() == 2);
  CHECK(R.labels() == std::vector<int>{2, 4});
  CHECK(R.f_vector() == std::vector<long>{1, 2});  // no edge 24
}

TEST_CASE("neighbourliness") {
  CHECK(SimplicialComplex::simplex(4).is_neighbourly());
  CHECK(SimplicialComplex::skeleton(5, 2).is_neighbourly());  // 2 of 5
  CHECK_FALSE(SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}).is_neighbourly());
  auto paper5 = SimplicialComplex::from_facets(5, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                                                   {2, 3, 4}, {2, 3, 5}, {4, 5}});
  CHECK(paper5.is_neighbourly());
  CHECK(paper5.is_m_neighbourly(2));
  CHECK_FALSE(paper5.is_m_neighbourly(3));
}

TEST_CASE("canonical facets are a permutation invariant") {
  auto A = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto B = SimplicialComplex::from_facets(4, {{1, 3}, {3, 2}, {2, 4}, {1, 4}});  // relabeled square
  auto P = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}});          // path
  CHECK(A.canonical_facets() == B.canonical_facets());
  CHECK(A.isomorphic_to(B));
  CHECK_FALSE(A.isomorphic_to(P));
  CHECK(A.canonical_key() != P.canonical_key());
}

TEST_CASE("join multiplies face families") {
  auto amb = SimplicialComplex::from_facets(4, {{1}, {2}, {3}, {4}});
  auto K = join(amb.restriction(0b0011), amb.restriction(0b1100));
  // join of two S^0s is a circle on 4 vertices
  CHECK(K.n() == 4);
  CHECK(K.f_vector() == std::vector<long>{1, 4, 4});
  CHECK_FALSE(K.has_face(0b0011));  // 1 and 2 stay a non-face
  CHECK(K.has_face(0b0101));
}

TEST_CASE("iota inclusion is a valid simplicial map") {
  auto K = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto m = iota_inclusion(K, 0b0101, 0b1010);
  CHECK(m.valid());
  CHECK(m.face_image(0) == 0);
}

TEST_CASE("rng streams are deterministic and forks are independent") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng base(7);
  auto f1 = base.fork(1), f2 = base.fork(2);
  CHECK(f1.next_u64() != f2.next_u64());
  Rng c(9);
  for (int i = 0; i < 1000; ++i) {
    long v = c.next_in(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    Rat r = c.next_rat(-1, 1, 8);
    CHECK(r >= -1);
    CHECK(r <= 1);
    CHECK(rat_den(r) <= 8);
  }
}

TEST_CASE("decimal parsing is exact") {
  CHECK(rat_from_decimal("-0.25") == Rat(-1, 4));
  CHECK(rat_from_decimal("7") == Rat(7));
  CHECK(rat_from_decimal("3.14159") == Rat(314159, 100000));
  CHECK(rat_from_decimal("1e-3") == Rat(1, 1000));
  CHECK_THROWS_AS(rat_from_decimal("zebra"), input_error);
}
