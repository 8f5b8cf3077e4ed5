#include <doctest.h>

#include <algorithm>
#include <set>

#include "liecomb/root_datum.hpp"

using namespace liecomb;

namespace {

bool contains(const std::vector<RVec>& xs, const RVec& v) {
  return std::any_of(xs.begin(), xs.end(), [&](const RVec& x) { return x == v; });
}

}  // namespace

TEST_CASE("A1 root datum") {
  RootDatum d = build_root_datum(Family::A, 1);
  CHECK(d.roots.size() == 2);
  CHECK(contains(d.roots, rvec({1, -1})));
  CHECK(contains(d.roots, rvec({-1, 1})));
  CHECK(d.two_rho == rvec({1, -1}));
  CHECK(d.num_simple() == 1);
}

TEST_CASE("G2 realization has the 12 stated roots") {
  RootDatum d = build_root_datum(Family::G2, 2);
  CHECK(d.roots.size() == 12);
  for (long a : {1L, -1L}) {
    CHECK(contains(d.roots, rvec({2 * a, 0})));
    CHECK(contains(d.roots, rvec({0, 2 * a})));
    for (long b : {1L, -1L}) {
      CHECK(contains(d.roots, rvec({a, b})));
      CHECK(contains(d.roots, rvec({a, 3 * b})));
    }
  }
  CHECK(d.two_rho == rvec({6, 2}));
}

TEST_CASE("D2 is A1 x A1 in SO(2,2) coordinates") {
  RootDatum d = build_root_datum(Family::D, 2);
  CHECK(d.roots.size() == 4);
  CHECK(contains(d.roots, rvec({1, -1})));
  CHECK(contains(d.roots, rvec({-1, 1})));
  CHECK(contains(d.roots, rvec({1, 1})));
  CHECK(contains(d.roots, rvec({-1, -1})));
}

TEST_CASE("roots pair to 2 with their own coroots") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3},
                                                         {Family::B, 3},
                                                         {Family::C, 3},
                                                         {Family::D, 4},
                                                         {Family::G2, 2}}) {
    RootDatum d = build_root_datum(f, r);
    for (size_t i = 0; i < d.roots.size(); ++i)
      CHECK(dot(d.roots[i], d.coroots[i]) == 2);
  }
}

TEST_CASE("simple reflections permute the root set") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 3}, {Family::D, 3}, {Family::G2, 2}}) {
    RootDatum d = build_root_datum(f, r);
    for (size_t k = 0; k < d.num_simple(); ++k) {
      for (const RVec& alpha : d.roots)
        CHECK(contains(d.roots, apply_simple(d, k, alpha, Side::Weight)));
    }
  }
}

TEST_CASE("dominant_rep examples") {
  RootDatum a2 = build_root_datum(Family::A, 2);
  auto [v1, w1] = dominant_rep(a2, LatticeVector::coweight(rvec({0, 2, 1})));
  CHECK(v1.coords == rvec({2, 1, 0}));

  auto [v2, w2] = dominant_rep(a2, LatticeVector::coweight(rvec({2, 1, 0})));
  CHECK(v2.coords == rvec({2, 1, 0}));
  CHECK(w2.empty());

  RootDatum b2 = build_root_datum(Family::B, 2);
  auto [v3, w3] = dominant_rep(b2, LatticeVector::coweight(rvec({-1, 2})));
  CHECK(v3.coords == rvec({2, 1}));
}

TEST_CASE("dominant_rep word reproduces the orbit move") {
  RootDatum d = build_root_datum(Family::B, 3);
  RVec v = rvec({-2, 3, -1});
  auto [dom, word] = dominant_rep(d, LatticeVector::coweight(v));
  CHECK(d.is_dominant(dom));
  CHECK(apply_word(d, word, v, Side::Coweight) == dom.coords);
}

TEST_CASE("weyl_orbit sizes") {
  RootDatum a2 = build_root_datum(Family::A, 2);
  CHECK(weyl_orbit(a2, LatticeVector::coweight(rvec({2, 1, 0}))).size() == 6);
  CHECK(weyl_orbit(a2, LatticeVector::coweight(rvec({1, 1, 0}))).size() == 3);

  // (1,0) is singular in this realization: it is killed by the reflection in
  // (0,2), so the orbit is half the Weyl group.
  RootDatum g2 = build_root_datum(Family::G2, 2);
  CHECK(weyl_orbit(g2, LatticeVector::coweight(rvec({1, 0}))).size() == 6);
  CHECK(weyl_orbit(g2, LatticeVector::coweight(rvec({2, 1}))).size() == 12);
}

TEST_CASE("star_norm2 examples") {
  RootDatum sl4 = build_root_datum(Family::A, 3);
  CHECK(star_norm2(sl4, rvec({1, 0, 0, -1})) == 6);
  CHECK(star_norm2(sl4, rvec({0, 0, 0, 0})) == 0);
  RootDatum sp4 = build_root_datum(Family::C, 2);
  CHECK(star_norm2(sp4, rvec({1, 1})) == 6);
}

TEST_CASE("star_norm2 is Weyl invariant and positively homogeneous") {
  RootDatum d = build_root_datum(Family::B, 3);
  RVec v = rvec({2, -1, 3});
  Rational base = star_norm2(d, v);
  for (const RVec& u : weyl_orbit(d, LatticeVector::coweight(v)))
    CHECK(star_norm2(d, u) == base);
  CHECK(star_norm2(d, RVec(3 * v)) == 3 * base);
}

TEST_CASE("star_norm2 is the orbit maximum of the 2rho pairing") {
  RootDatum d = build_root_datum(Family::C, 3);
  RVec v = rvec({1, -2, 2});
  Rational best = dot(d.two_rho, v);
  for (const RVec& u : weyl_orbit(d, LatticeVector::coweight(v)))
    best = std::max(best, dot(d.two_rho, u));
  CHECK(star_norm2(d, v) == best);
}

TEST_CASE("dominance_leq examples") {
  RootDatum gl2 = build_root_datum(Family::A, 1);
  CHECK(dominance_leq(gl2, LatticeVector::coweight(rvec({1, 1})),
                      LatticeVector::coweight(rvec({2, 0}))));
  RootDatum gl3 = build_root_datum(Family::A, 2);
  CHECK(dominance_leq(gl3, LatticeVector::coweight(rvec({1, 1, 1})),
                      LatticeVector::coweight(rvec({2, 1, 0}))));
  // (2,2,-1) - (2,1,0) is the second simple root, so the order holds in
  // exactly one direction.
  CHECK_FALSE(dominance_leq(gl3, LatticeVector::coweight(rvec({2, 2, -1})),
                            LatticeVector::coweight(rvec({2, 1, 0}))));
  CHECK(dominance_leq(gl3, LatticeVector::coweight(rvec({2, 1, 0})),
                      LatticeVector::coweight(rvec({2, 2, -1}))));
  CHECK_FALSE(dominance_leq(gl3, LatticeVector::coweight(rvec({3, 0, 0})),
                            LatticeVector::coweight(rvec({2, 1, 0}))));
}

TEST_CASE("dominance_leq is reflexive and antisymmetric on samples") {
  RootDatum d = build_root_datum(Family::A, 2);
  std::vector<RVec> doms = {rvec({2, 1, 0}), rvec({1, 1, 1}), rvec({3, 0, 0})};
  for (const RVec& v : doms) {
    LatticeVector lv = LatticeVector::coweight(v);
    CHECK(dominance_leq(d, lv, lv));
  }
  for (const RVec& a : doms)
    for (const RVec& b : doms) {
      if (a == b) continue;
      LatticeVector la = LatticeVector::coweight(a), lb = LatticeVector::coweight(b);
      bool both_ways = dominance_leq(d, la, lb) && dominance_leq(d, lb, la);
      CHECK_FALSE(both_ways);
    }
}

TEST_CASE("enumerate_weyl matches the expected group orders") {
  CHECK(enumerate_weyl(build_root_datum(Family::A, 3)).size() == 24);
  CHECK(enumerate_weyl(build_root_datum(Family::B, 2)).size() == 8);
  CHECK(enumerate_weyl(build_root_datum(Family::C, 3)).size() == 48);
  CHECK(enumerate_weyl(build_root_datum(Family::D, 3)).size() == 24);
  CHECK(enumerate_weyl(build_root_datum(Family::G2, 2)).size() == 12);
  CHECK(expected_weyl_order(Family::A, 3) == 24);
  CHECK(expected_weyl_order(Family::D, 4) == 192);
  CHECK(expected_weyl_order(Family::G2, 2) == 12);
}

TEST_CASE("enumerate_weyl words have the stated length") {
  RootDatum d = build_root_datum(Family::B, 2);
  for (const WeylElement& w : enumerate_weyl(d)) {
    CHECK(static_cast<int>(w.word.size()) == w.length);
    RVec v = rvec({5, 2});  // regular
    RVec via_word = apply_word(d, w.word, v, Side::Weight);
    RVec via_matrix = w.weight_action * v;
    CHECK(via_word == via_matrix);
  }
}

TEST_CASE("direct_sum concatenates ranks and roots") {
  RootDatum a1 = build_root_datum(Family::A, 1);
  RootDatum b2 = build_root_datum(Family::B, 2);
  RootDatum s = direct_sum(a1, b2);
  CHECK(s.ambient_dim == 4);
  CHECK(s.roots.size() == a1.roots.size() + b2.roots.size());
  CHECK(s.num_simple() == a1.num_simple() + b2.num_simple());
  CHECK(s.two_rho == rvec({1, -1, 3, 1}));
}

TEST_CASE("decompose_in_basis solves and detects failure") {
  std::vector<RVec> basis = {rvec({1, -1, 0}), rvec({0, 1, -1})};
  auto c = decompose_in_basis(basis, rvec({1, 0, -1}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 1);
  CHECK_FALSE(decompose_in_basis(basis, rvec({1, 0, 0})).has_value());
}

TEST_CASE("root datum JSON is deterministic") {
  std::string a = to_json(build_root_datum(Family::B, 2));
  std::string b = to_json(build_root_datum(Family::B, 2));
  CHECK(a == b);
  CHECK(a.find("\"family\"") != std::string::npos);
  CHECK(a.find("\"coroots\"") != std::string::npos);
}

TEST_CASE("torus datum has no roots and zero norm") {
  RootDatum t = make_torus_datum(3);
  CHECK(t.roots.empty());
  CHECK(star_norm2(t, rvec({4, -7, 2})) == 0);
  CHECK(t.is_dominant(LatticeVector::coweight(rvec({-5, 0, 1}))));
}
