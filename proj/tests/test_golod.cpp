#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "maw/golod.hpp"
#include "oracles.hpp"

using namespace maw;

namespace {

const SimplicialComplex& square() {
  static auto K = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  return K;
}

const SimplicialComplex& hexagon() {
  static auto K = SimplicialComplex::from_facets(
      6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  return K;
}

const SimplicialComplex& paper5() {
  static auto K = SimplicialComplex::from_facets(5, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                                                     {2, 3, 4}, {2, 3, 5}, {4, 5}});
  return K;
}

// Exhaustive reference catalog: every downward-closed face family on [n] that
// uses all n vertices, one canonical key per isomorphism class.
std::set<std::string> brute_catalog_keys(int n) {
  std::vector<VSet> big;
  for (VSet m = 0; m <= vs_full(n); ++m)
    if (vs_size(m) >= 2) big.push_back(m);
  std::set<std::string> keys;
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << big.size()); ++pick) {
    std::vector<bool> in(std::size_t(1) << n, false);
    for (VSet m = 0; m <= vs_full(n); ++m)
      if (vs_size(m) <= 1) in[static_cast<std::size_t>(m)] = true;
    for (std::size_t i = 0; i < big.size(); ++i)
      if ((pick >> i) & 1) in[static_cast<std::size_t>(big[i])] = true;
    bool closed = true;
    for (VSet m = 0; m <= vs_full(n) && closed; ++m) {
      if (!in[static_cast<std::size_t>(m)]) continue;
      for (int v : vs_elements(m))
        if (!in[static_cast<std::size_t>(m & ~(VSet(1) << v))]) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<VSet> faces;
    for (VSet m = 1; m <= vs_full(n); ++m)
      if (in[static_cast<std::size_t>(m)]) faces.push_back(m);
    keys.insert(SimplicialComplex::from_facet_masks(n, faces).canonical_key());
  }
  return keys;
}

std::set<std::string> keys_of(const std::vector<SimplicialComplex>& v) {
  std::set<std::string> keys;
  for (const auto& K : v) keys.insert(K.canonical_key());
  return keys;
}

}  // namespace

TEST_CASE("paper example is Golod up to triple brackets over several fields") {
  for (long long p : {2LL, 3LL, 0LL}) {
    auto v = classify_golod(paper5(), FieldSpec{p});
    CHECK(v.products_vanish);
    REQUIRE(v.massey_all_vanish.has_value());
    CHECK(*v.massey_all_vanish);
    CHECK(v.label == "Golod-up-to-triple-Massey");
    CHECK(v.witness.empty());
    CHECK(v.classes == 9);
    // every class sits on >= 3 of the 5 vertices, so no disjoint pair exists
    CHECK(v.pairs_checked == 0);
  }
}

TEST_CASE("two disjoint edges exercise real product pairs and stay product-trivial") {
  auto K = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
  auto v = classify_golod(K, FieldSpec{2});
  CHECK(v.products_vanish);
  CHECK(v.pairs_checked > 0);
  REQUIRE(v.massey_all_vanish.has_value());
  CHECK(*v.massey_all_vanish);
}

TEST_CASE("cycles are rejected at the product stage") {
  for (const auto& K : {square(), hexagon()}) {
    auto v = classify_golod(K, FieldSpec{0});
    CHECK_FALSE(v.products_vanish);
    CHECK_FALSE(v.massey_all_vanish.has_value());
    CHECK(v.label == "not-Golod");
    CHECK_FALSE(v.witness.empty());
  }
}

TEST_CASE("classifier refuses unused vertices") {
  auto K = SimplicialComplex::from_facets(3, {{1, 2}});
  CHECK_THROWS_AS(classify_golod(K, FieldSpec{0}), input_error);
}

TEST_CASE("splitting obstruction localizes to degree 2 on the paper example") {
  for (long long p : {0LL, 2LL, 3LL}) {
    auto r = extractible_necessary(paper5(), FieldSpec{p});
    CHECK_FALSE(r.passes);
    CHECK(r.failing_degrees == std::vector<int>{2});
    CHECK(r.homology_dims == std::vector<long>{0, 0, 1, 1});
  }
}

TEST_CASE("splitting obstruction on spheres and on split-friendly complexes") {
  auto r4 = extractible_necessary(square(), FieldSpec{0});
  CHECK_FALSE(r4.passes);
  CHECK(r4.failing_degrees == std::vector<int>{1});

  auto rs = extractible_necessary(SimplicialComplex::skeleton(4, 3), FieldSpec{0});
  CHECK_FALSE(rs.passes);
  CHECK(rs.failing_degrees == std::vector<int>{2});

  auto rd = extractible_necessary(SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}),
                                  FieldSpec{0});
  CHECK(rd.passes);
  CHECK(rd.failing_degrees.empty());

  auto rf = extractible_necessary(SimplicialComplex::simplex(3), FieldSpec{0});
  CHECK(rf.passes);
}

TEST_CASE("series data for the paper example and the square") {
  auto s5 = golod_poincare_series(paper5(), FieldSpec{0});
  CHECK(s5.numerator == std::vector<long long>{1, 5, 10, 10, 5, 1});
  CHECK(s5.denominator == std::vector<long long>{1, 0, -4, -4, -1});
  CHECK_FALSE(s5.to_string().empty());

  auto s4 = golod_poincare_series(square(), FieldSpec{0});
  CHECK(s4.numerator == std::vector<long long>{1, 4, 6, 4, 1});
  CHECK(s4.denominator == std::vector<long long>{1, 0, -2, -1});
}

TEST_CASE("catalog matches the exhaustive reference for small n") {
  CHECK(catalog_complexes(1).size() == 1);
  CHECK(catalog_complexes(2).size() == 2);
  CHECK(catalog_complexes(3).size() == 5);
  for (int n = 1; n <= 4; ++n) {
    auto cat = catalog_complexes(n);
    auto keys = keys_of(cat);
    CHECK(keys.size() == cat.size());  // no isomorphic duplicates
    CHECK(keys == brute_catalog_keys(n));
    for (const auto& K : cat) {
      CHECK(K.n() == n);
      CHECK(K.ghost_vertices() == 0);
    }
  }
}

TEST_CASE("catalog order is deterministic") {
  auto a = catalog_complexes(4);
  auto b = catalog_complexes(4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].facets() == b[i].facets());
}

TEST_CASE("neighbourly catalog equals the filtered catalog where both exist") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> expect;
    for (const auto& K : catalog_complexes(n))
      if (K.is_neighbourly()) expect.insert(K.canonical_key());
    CHECK(keys_of(neighbourly_catalog(n)) == expect);
  }
}

TEST_CASE("neighbourly catalog at six vertices") {
  auto cat = neighbourly_catalog(6);
  auto keys = keys_of(cat);
  CHECK(keys.size() == cat.size());
  for (const auto& K : cat) {
    CHECK(K.n() == 6);
    CHECK(K.ghost_vertices() == 0);
    CHECK(K.is_neighbourly());
  }
  CHECK(keys.count(SimplicialComplex::skeleton(6, 3).canonical_key()) == 1);
  CHECK(keys.count(SimplicialComplex::simplex(6).canonical_key()) == 1);
  CHECK_FALSE(keys.count(hexagon().canonical_key()) == 1);
}

TEST_CASE("catalog guards") {
  CHECK_THROWS_AS(catalog_complexes(6), size_guard_error);
  CHECK_THROWS_AS(catalog_complexes(0), size_guard_error);
  CHECK_THROWS_AS(neighbourly_catalog(7), size_guard_error);
}
