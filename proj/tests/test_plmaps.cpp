#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <initializer_list>
#include <vector>

#include "maw/plmaps.hpp"
#include "maw/rng.hpp"
#include "oracles.hpp"

using namespace maw;

namespace {

VSet L(std::initializer_list<int> labels) {
  VSet s = 0;
  for (int v : labels) s |= VSet(1) << (v - 1);
  return s;
}

OrderedPartition OP(int n, std::initializer_list<std::initializer_list<int>> blocks) {
  OrderedPartition P;
  P.n = n;
  for (auto b : blocks) P.blocks.push_back(L(b));
  return P;
}

const SimplicialComplex& square() {
  static auto K = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  return K;
}

std::vector<Rat> R(std::initializer_list<Rat> v) { return std::vector<Rat>(v); }

BarycentricPoint random_point_on(const SimplicialComplex& K, Rng& rng) {
  const auto& facets = K.facets();
  VSet f = facets[static_cast<std::size_t>(rng.next_below(facets.size()))];
  // random nonempty subset of the facet
  auto elems = vs_elements(f);
  VSet supp = 0;
  for (int v : elems)
    if (rng.next_below(2)) supp |= VSet(1) << v;
  if (!supp) supp = VSet(1) << elems[static_cast<std::size_t>(rng.next_below(elems.size()))];
  std::vector<Rat> z(static_cast<std::size_t>(K.n()), Rat(0));
  Rat sum(0);
  for (int v : vs_elements(supp)) {
    z[static_cast<std::size_t>(v)] = Rat(static_cast<long>(rng.next_in(1, 9)));
    sum += z[static_cast<std::size_t>(v)];
  }
  for (auto& c : z) c /= sum;
  return BarycentricPoint::make(std::move(z));
}

SmashPoint random_hat_point(const SimplicialComplex& K, Rng& rng) {
  const auto& facets = K.facets();
  VSet f = facets[static_cast<std::size_t>(rng.next_below(facets.size()))];
  VSet supp = 0;
  for (int v : vs_elements(f))
    if (rng.next_below(2)) supp |= VSet(1) << v;
  std::vector<Rat> x(static_cast<std::size_t>(K.n()), Rat(1));
  for (int v : vs_elements(supp)) x[static_cast<std::size_t>(v)] = rng.next_rat(Rat(-9, 10), Rat(9, 10), 20);
  return SmashPoint::make(std::move(x));
}

}  // namespace

TEST_CASE("interval chart values on fixed inputs") {
  auto a = h_eval(Rat(0), BarycentricPoint::make(R({Rat(1), Rat(0)})));
  CHECK(a == SmashPoint::make(R({Rat(0), Rat(1)})));

  auto b = h_eval(Rat(1, 3), BarycentricPoint::make(R({Rat(1, 2), Rat(1, 4), Rat(1, 4)})));
  CHECK(b == SmashPoint::make(R({Rat(1, 3), Rat(2, 3), Rat(2, 3)})));

  auto top = h_eval(Rat(1), BarycentricPoint::make(R({Rat(1, 2), Rat(1, 2)})));
  CHECK(top == SmashPoint::make(R({Rat(1), Rat(1)})));

  auto bot = h_eval(Rat(-1), BarycentricPoint::make(R({Rat(1, 2), Rat(1, 2)})));
  CHECK(bot.basepoint);

  CHECK_THROWS_AS(h_eval(Rat(2), BarycentricPoint::make(R({Rat(1)}))), input_error);
}

TEST_CASE("chart is independent of which maximal coordinate is picked") {
  auto x = h_eval(Rat(1, 5), BarycentricPoint::make(R({Rat(1, 2), Rat(1, 2)})));
  CHECK(x == SmashPoint::make(R({Rat(1, 5), Rat(1, 5)})));
  auto y = h_eval(Rat(-1, 3),
                  BarycentricPoint::make(R({Rat(1, 3), Rat(1, 3), Rat(1, 3)})));
  CHECK(y.x == std::vector<Rat>(3, Rat(-1, 3)));
  auto z = h_eval(Rat(0), BarycentricPoint::make(R({Rat(1, 2), Rat(1, 2), Rat(0)})));
  CHECK(z == SmashPoint::make(R({Rat(0), Rat(0), Rat(1)})));
}

TEST_CASE("coordinates off the support land exactly at one") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng.next_in(2, 6));
    auto z = random_point_on(SimplicialComplex::simplex(n), rng);
    const Rat t = rng.next_rat(Rat(-99, 100), Rat(99, 100), 50);
    auto x = h_eval(t, z);
    REQUIRE_FALSE(x.basepoint);
    CHECK(x.support_ne1() == z.support());
  }
}

TEST_CASE("interval chart round trips") {
  Rng rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng.next_in(2, 6));
    auto z = random_point_on(SimplicialComplex::simplex(n), rng);
    const Rat t = rng.next_rat(Rat(-99, 100), Rat(99, 100), 50);
    auto back = h_inv_eval(h_eval(t, z));
    CHECK(back.t == t);
    CHECK(back.z == z);
  }
}

TEST_CASE("the two exceptional points invert to the barycenter") {
  auto b = h_inv_eval(SmashPoint::base(3));
  CHECK(b.t == Rat(-1));
  CHECK(b.z == BarycentricPoint::make(R({Rat(1, 3), Rat(1, 3), Rat(1, 3)})));

  auto o = h_inv_eval(SmashPoint::make(R({Rat(1), Rat(1)})));
  CHECK(o.t == Rat(1));
  CHECK(o.z == BarycentricPoint::make(R({Rat(1, 2), Rat(1, 2)})));
}

TEST_CASE("point constructors validate their ranges") {
  CHECK_THROWS_AS(SmashPoint::make(R({Rat(3, 2)})), input_error);
  CHECK(SmashPoint::make(R({Rat(-1), Rat(0)})).basepoint);
  CHECK_THROWS_AS(BarycentricPoint::make(R({Rat(-1, 2), Rat(3, 2)})), input_error);
  CHECK_THROWS_AS(BarycentricPoint::make(R({Rat(1, 2), Rat(1, 4)})), input_error);
}

TEST_CASE("blockwise membership on the 4-cycle") {
  auto single = OP(4, {{1, 2, 3, 4}});
  auto split = OP(4, {{1, 3}, {2, 4}});

  auto edge12 = SmashPoint::make(R({Rat(0), Rat(0), Rat(1), Rat(1)}));
  CHECK(smash_membership(edge12, square(), single));

  auto diag13 = SmashPoint::make(R({Rat(0), Rat(1), Rat(0), Rat(1)}));
  CHECK_FALSE(smash_membership(diag13, square(), single));
  CHECK_FALSE(smash_membership(diag13, square(), split));

  auto vert1 = SmashPoint::make(R({Rat(0), Rat(1), Rat(1), Rat(1)}));
  CHECK(smash_membership(vert1, square(), split));

  CHECK(smash_membership(SmashPoint::base(4), square(), split));
  CHECK_THROWS_AS(smash_membership(edge12, square(), OP(3, {{1, 2, 3}})), input_error);
}

TEST_CASE("weak comparison map on the documented 4-cycle input") {
  auto z = BarycentricPoint::make(R({Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)}));
  auto r = phi_eval(square(), R({Rat(1, 2), Rat(0), Rat(0)}), Rat(1, 4), z);
  CHECK_FALSE(r.basepoint);
  CHECK(r.s == Rat(0));
  CHECK(r.y == R({Rat(1, 2), Rat(0), Rat(0), Rat(0)}));
  CHECK(r.blocks == OP(4, {{2, 3, 4}, {1}}));
  CHECK(r.member);
}

TEST_CASE("weak comparison map collapses exactly when the parameters do") {
  auto z = BarycentricPoint::make(R({Rat(1), Rat(0), Rat(0), Rat(0)}));
  CHECK(phi_eval(square(), R({Rat(0), Rat(0), Rat(0)}), Rat(0), z).basepoint);
  CHECK(phi_eval(square(), R({Rat(1), Rat(0), Rat(0)}), Rat(0), z).basepoint);
  CHECK(phi_eval(square(), R({Rat(1, 2), Rat(0), Rat(0)}), Rat(-1), z).basepoint);
  CHECK_FALSE(phi_eval(square(), R({Rat(1, 2), Rat(0), Rat(0)}), Rat(0), z).basepoint);

  CHECK_THROWS_AS(phi_eval(square(), R({Rat(0), Rat(0)}), Rat(0), z), input_error);
  auto bad = BarycentricPoint::make(R({Rat(1, 2), Rat(0), Rat(1, 2), Rat(0)}));
  CHECK_THROWS_AS(phi_eval(square(), R({Rat(0), Rat(0), Rat(0)}), Rat(0), bad),
                  input_error);
}

TEST_CASE("weak comparison membership holds on random samples") {
  Rng rng(77);
  auto paper5 = SimplicialComplex::from_facets(5, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                                                   {2, 3, 4}, {2, 3, 5}, {4, 5}});
  for (const auto& K : {square(), paper5}) {
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Rat> ts(static_cast<std::size_t>(K.n() - 1));
      for (auto& t : ts) t = rng.next_rat(Rat(-1), Rat(1), 8);
      auto z = random_point_on(K, rng);
      auto r = phi_eval(K, ts, rng.next_rat(Rat(-1), Rat(1), 8), z);
      CHECK(r.member);
    }
  }
}

TEST_CASE("squeeze map is the identity at zero parameters") {
  auto K = SimplicialComplex::skeleton(5, 2);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_hat_point(K, rng);
    auto r = psi_neighbourly_eval(K, std::vector<Rat>(4, Rat(0)), x);
    CHECK(r.out == x);
    CHECK(r.member);
    CHECK(r.beta == Rat(0));
  }
}

TEST_CASE("squeeze slopes follow the distance sums") {
  auto K = SimplicialComplex::skeleton(5, 2);
  auto x = SmashPoint::make(R({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}));
  auto r = psi_neighbourly_eval(K, R({Rat(1, 2), Rat(0), Rat(0), Rat(0)}), x);
  CHECK(r.alphas == R({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}));
  CHECK(r.beta == Rat(1, 2));
  // alpha_1 >= 1/2 squeezes coordinate 1 to (1+1)/2-1 = 0, the rest keep slope 1
  CHECK(r.out == SmashPoint::make(R({Rat(0), Rat(1), Rat(1), Rat(1), Rat(1)})));
  CHECK(r.blocks == OP(5, {{2, 3, 4, 5}, {1}}));
  CHECK(r.member);
}

TEST_CASE("squeeze map rejects bad inputs and collapses unit parameters") {
  CHECK_THROWS_AS(psi_neighbourly_eval(square(), R({Rat(0), Rat(0), Rat(0)}),
                                       SmashPoint::base(4)),
                  input_error);
  auto K = SimplicialComplex::skeleton(5, 2);
  auto outside = SmashPoint::make(R({Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)}));
  CHECK_THROWS_AS(psi_neighbourly_eval(K, std::vector<Rat>(4, Rat(0)), outside), input_error);

  auto ok = SmashPoint::make(R({Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)}));
  auto r = psi_neighbourly_eval(K, R({Rat(1), Rat(0), Rat(0), Rat(0)}), ok);
  CHECK(r.out.basepoint);
  CHECK(r.member);
  CHECK(psi_neighbourly_eval(K, std::vector<Rat>(4, Rat(0)), SmashPoint::base(5))
            .out.basepoint);
}

TEST_CASE("squeeze membership holds on random samples") {
  Rng rng(88);
  for (const auto& K : {SimplicialComplex::skeleton(5, 2), SimplicialComplex::skeleton(4, 2),
                        SimplicialComplex::skeleton(4, 3), SimplicialComplex::simplex(4)}) {
    REQUIRE(K.is_neighbourly());
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<Rat> ts(static_cast<std::size_t>(K.n() - 1));
      for (auto& t : ts) t = rng.next_rat(Rat(-1), Rat(1), 8);
      auto r = psi_neighbourly_eval(K, ts, random_hat_point(K, rng));
      CHECK(r.member);
    }
  }
}

TEST_CASE("added vertex coordinate follows the four cases") {
  auto K = SimplicialComplex::skeleton(5, 2);
  auto x = SmashPoint::make(std::vector<Rat>(5, Rat(1)));
  auto ts = R({Rat(1, 2), Rat(-1, 4), Rat(0), Rat(0)});
  // alpha = -1/4, beta = 1/2
  CHECK(psi_disjoint_vertex_eval(K, ts, Rat(0), x).y == Rat(1));
  CHECK(psi_disjoint_vertex_eval(K, ts, Rat(1, 2), x).y == Rat(1));
  CHECK(psi_disjoint_vertex_eval(K, ts, Rat(-1, 4), x).y == Rat(1));
  CHECK(psi_disjoint_vertex_eval(K, ts, Rat(3, 4), x).y == Rat(0));
  CHECK(psi_disjoint_vertex_eval(K, ts, Rat(-1, 2), x).y == Rat(1, 3));
  auto bp = psi_disjoint_vertex_eval(K, ts, Rat(1), x);
  CHECK(bp.y == Rat(-1));
  CHECK(bp.out.basepoint);
  CHECK(bp.member);
}

TEST_CASE("added vertex blocks insert the new label") {
  auto K = SimplicialComplex::skeleton(5, 2);
  auto x = SmashPoint::make(std::vector<Rat>(5, Rat(1)));
  auto ts = R({Rat(1, 2), Rat(0), Rat(0), Rat(0)});
  auto fresh = psi_disjoint_vertex_eval(K, ts, Rat(1, 4), x);
  CHECK(fresh.blocks == OP(6, {{2, 3, 4, 5}, {6}, {1}}));
  CHECK(fresh.member);
  auto tied = psi_disjoint_vertex_eval(K, ts, Rat(1, 2), x);
  CHECK(tied.blocks == OP(6, {{2, 3, 4, 5}, {1, 6}}));
  CHECK(tied.member);
  auto zero = psi_disjoint_vertex_eval(K, ts, Rat(0), x);
  CHECK(zero.blocks == OP(6, {{2, 3, 4, 5, 6}, {1}}));
  CHECK(zero.member);
}

TEST_CASE("added vertex keeps membership when the tied block carries a face") {
  // two disjoint points: {1,2} is not a face, so the pairing of the new vertex
  // with the zero block rather than the s block is observable
  auto K = SimplicialComplex::from_facets(2, {{1}, {2}});
  auto x = SmashPoint::make(R({Rat(0), Rat(1)}));
  auto r = psi_disjoint_vertex_eval(K, R({Rat(1, 2)}), Rat(1, 2), x);
  CHECK(r.y == Rat(1));
  CHECK(r.out == SmashPoint::make(R({Rat(-1, 2), Rat(0), Rat(1)})));
  CHECK(r.blocks == OP(3, {{2}, {1, 3}}));
  CHECK(r.member);
}

TEST_CASE("explicit inner evaluator matches the convenience wrapper") {
  auto K = SimplicialComplex::skeleton(4, 2);
  SmashEvaluator inner = [&K](const std::vector<Rat>& t, const SmashPoint& p) {
    return psi_neighbourly_eval(K, t, p);
  };
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> ts(3);
    for (auto& t : ts) t = rng.next_rat(Rat(-1), Rat(1), 6);
    const Rat s = rng.next_rat(Rat(-1), Rat(1), 6);
    auto x = random_hat_point(K, rng);
    auto a = psi_disjoint_vertex_eval(K, inner, ts, s, x);
    auto b = psi_disjoint_vertex_eval(K, ts, s, x);
    CHECK(a.out == b.out);
    CHECK(a.blocks == b.blocks);
    CHECK(a.member == b.member);
    CHECK(a.member);
    CHECK(a.y == b.y);
  }
}

TEST_CASE("straightening homotopy fixes endpoints and flattens the outer quarters") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat t = rng.next_rat(Rat(0), Rat(1), 16);
    const Rat s = rng.next_rat(Rat(0), Rat(1), 16);
    auto v = faithful_homotopy_eval(t, s);
    CHECK(v >= 0);
    CHECK(v <= 1);
    CHECK(faithful_homotopy_eval(Rat(0), s) == s);
    CHECK(faithful_homotopy_eval(t, Rat(0)) == Rat(0));
    CHECK(faithful_homotopy_eval(t, Rat(1)) == Rat(1));
    // monotone in the coordinate
    const Rat s2 = rng.next_rat(Rat(0), Rat(1), 16);
    if (s <= s2)
      CHECK(faithful_homotopy_eval(t, s) <= faithful_homotopy_eval(t, s2));
    else
      CHECK(faithful_homotopy_eval(t, s2) <= faithful_homotopy_eval(t, s));
  }
  CHECK(faithful_homotopy_eval(Rat(1), Rat(1, 8)) == Rat(0));
  CHECK(faithful_homotopy_eval(Rat(1), Rat(1, 4)) == Rat(0));
  CHECK(faithful_homotopy_eval(Rat(1), Rat(1, 2)) == Rat(1, 2));
  CHECK(faithful_homotopy_eval(Rat(1), Rat(3, 4)) == Rat(1));
  CHECK(faithful_homotopy_eval(Rat(1), Rat(7, 8)) == Rat(1));
  // junction values agree with both adjacent formulas
  const Rat t(1, 3);
  CHECK(faithful_homotopy_eval(t, Rat(1, 4)) == Rat(1, 4) * (1 - t));
  CHECK(faithful_homotopy_eval(t, Rat(3, 4)) == Rat(3, 4) + t * Rat(1, 4));
  CHECK_THROWS_AS(faithful_homotopy_eval(Rat(2), Rat(0)), input_error);
  CHECK_THROWS_AS(faithful_homotopy_eval(Rat(0), Rat(2)), input_error);
}

TEST_CASE("straightening homotopy in the symmetric interval convention") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat t = rng.next_rat(Rat(0), Rat(1), 16);
    const Rat s = rng.next_rat(Rat(-1), Rat(1), 16);
    CHECK(faithful_homotopy_eval_pm(t, s) ==
          2 * faithful_homotopy_eval(t, (s + 1) / 2) - 1);
    CHECK(faithful_homotopy_eval_pm(Rat(0), s) == s);
  }
  CHECK(faithful_homotopy_eval_pm(Rat(1), Rat(-1)) == Rat(-1));
  CHECK(faithful_homotopy_eval_pm(Rat(1), Rat(1)) == Rat(1));
  CHECK(faithful_homotopy_eval_pm(Rat(1), Rat(-3, 4)) == Rat(-1));
  CHECK(faithful_homotopy_eval_pm(Rat(1), Rat(3, 4)) == Rat(1));
}
