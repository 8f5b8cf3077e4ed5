#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "liecomb/errors.hpp"
#include "liecomb/gaussian.hpp"
#include "liecomb/satake.hpp"

using namespace liecomb;

namespace {

using C = std::complex<double>;

TPoly tmono(int e, long c = 1) {
  TPoly p;
  if (c) p[e] = c;
  return p;
}

}  // namespace

TEST_CASE("Kostka-Foulkes values") {
  CHECK(kostka_foulkes({2, 1}, {2, 1}) == tmono(0));
  CHECK(kostka_foulkes({3}, {3}) == tmono(0));
  CHECK(kostka_foulkes({2}, {1, 1}) == tmono(1));
  CHECK(kostka_foulkes({1, 1}, {2}) == TPoly{});
  CHECK(kostka_foulkes({3, 1}, {2, 2}) == tmono(1));
  CHECK(kostka_foulkes({2, 2}, {2, 1, 1}) == tmono(1));
  TPoly k21 = kostka_foulkes({2, 1}, {1, 1, 1});
  TPoly expect;
  expect[1] = 1;
  expect[2] = 1;
  CHECK(k21 == expect);
}

TEST_CASE("Kostka-Foulkes at t=1 counts SSYT") {
  // K_{(2,1),(1,1,1)}(1) = 2 standard tableaux of shape (2,1).
  TPoly k = kostka_foulkes({2, 1}, {1, 1, 1});
  Int total = 0;
  for (const auto& [e, c] : k) total += c;
  CHECK(total == 2);
}

TEST_CASE("partitions_of enumerates padded partitions") {
  auto ps = partitions_of(3, 3);
  CHECK(ps.size() == 3);
  for (const auto& p : ps) {
    CHECK(p.size() == 3);
    CHECK(p[0] + p[1] + p[2] == 3);
    CHECK(p[0] >= p[1]);
    CHECK(p[1] >= p[2]);
  }
}

TEST_CASE("satake_omega for GL2") {
  VirtualCharacter minuscule = satake_omega(2, rvec({1, 0}));
  REQUIRE(minuscule.terms.size() == 1);
  CHECK(minuscule.terms.at(rvec({1, 0})) == LaurentHalfQ::one());

  VirtualCharacter central = satake_omega(2, rvec({1, 1}));
  REQUIRE(central.terms.size() == 1);
  CHECK(central.terms.at(rvec({1, 1})) == LaurentHalfQ::one());

  VirtualCharacter two = satake_omega(2, rvec({2, 0}));
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms.at(rvec({2, 0})) == LaurentHalfQ::one());
  // Correction term -q^{-1} chi_{(1,1)}: a constant of absolute value <= 1
  // after multiplying by q.
  CHECK(two.terms.at(rvec({1, 1})) == LaurentHalfQ::monomial_half(-2, -1));
}

TEST_CASE("satake_omega is invariant under central shifts") {
  VirtualCharacter a = satake_omega(2, rvec({2, 0}));
  VirtualCharacter b = satake_omega(2, rvec({1, -1}));
  REQUIRE(b.terms.size() == a.terms.size());
  for (const auto& [lam, c] : a.terms) {
    RVec shifted = lam - rvec({1, 1});
    CHECK(b.terms.at(shifted) == c);
  }
}

TEST_CASE("satake_bruteforce GL2 examples") {
  BruteforceSatake s10 = satake_bruteforce(2, rvec({1, 0}), 3);
  CHECK(s10.sphere_size == 4);
  REQUIRE(s10.terms.size() == 1);
  CHECK(s10.terms.at(rvec({1, 0})) == 1);

  BruteforceSatake zero = satake_bruteforce(2, rvec({0, 0}), 3);
  CHECK(zero.sphere_size == 1);
  REQUIRE(zero.terms.size() == 1);
  CHECK(zero.terms.at(rvec({0, 0})) == 1);
}

TEST_CASE("satake_bruteforce GL3 minuscule sphere") {
  BruteforceSatake s = satake_bruteforce(3, rvec({1, 0, 0}), 2);
  CHECK(s.sphere_size == 7);  // p^2 + p + 1 lines
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms.at(rvec({1, 0, 0})) == 1);
}

TEST_CASE("symbolic Satake matches the bruteforce oracle at primes") {
  for (long p : {2L, 3L, 5L}) {
    for (const RVec& mu : {rvec({1, 0}), rvec({2, 0}), rvec({1, 1}), rvec({2, 1})}) {
      VirtualCharacter sym = satake_omega(2, mu);
      BruteforceSatake brute = satake_bruteforce(2, mu, p);
      REQUIRE(sym.terms.size() == brute.terms.size());
      for (const auto& [lam, c] : sym.terms)
        CHECK(c.eval(p) == brute.terms.at(lam));
    }
  }
  VirtualCharacter sym = satake_omega(3, rvec({2, 0, 0}));
  BruteforceSatake brute = satake_bruteforce(3, rvec({2, 0, 0}), 2);
  REQUIRE(sym.terms.size() == brute.terms.size());
  for (const auto& [lam, c] : sym.terms)
    CHECK(c.eval(2) == brute.terms.at(lam));
}

TEST_CASE("convolution is a homomorphism under the transform") {
  for (long p : {2L, 3L}) {
    RVec mu = rvec({1, 0});
    auto conv = convolution_omega(2, mu, mu, p);
    std::vector<C> x = {C(1.3, 0.4), C(0.2, -0.7)};
    VirtualCharacter smu = satake_omega(2, mu);
    C lhs = 0;
    for (const auto& [sigma, coefficient] : conv) {
      VirtualCharacter s = satake_omega(2, sigma);
      lhs += to_double(coefficient) * satake_eval(2, s, p, x);
    }
    C rhs = satake_eval(2, smu, p, x);
    CHECK(std::abs(lhs - rhs * rhs) < 1e-9);
  }
}

TEST_CASE("amplifier_select examples") {
  // At x = (1,1) the degree-2 candidate wins: chi_{(2,0)} = 3 beats
  // chi_{(1,0)} = 2 even after the -1/q correction.
  std::vector<C> ones = {C(1, 0), C(1, 0)};
  auto [mu1, v1] = amplifier_select(2, ones, 101, 2);
  CHECK(mu1 == rvec({2, 0}));
  CHECK(std::abs(v1 - C(3.0 - 1.0 / 101.0, 0)) < 1e-9);

  // Restricting to sup-norm 1 forces the minuscule coweight, whose transform
  // carries no q-correction at all.
  auto [mu0, v0] = amplifier_select(2, ones, 101, 1);
  CHECK(mu0 == rvec({1, 0}));
  CHECK(std::abs(v0 - C(2, 0)) < 1e-9);

  std::vector<C> alt = {C(1, 0), C(-1, 0)};
  auto [mu2, v2] = amplifier_select(2, alt, 101, 2);
  CHECK(mu2 == rvec({2, 0}));
}

TEST_CASE("amplifier value converges to the character sup as q grows") {
  std::vector<C> x = {C(0.9, 0.1), C(-0.4, 0.8)};
  auto [mu3, v3] = amplifier_select(2, x, 1000, 2);
  auto [mu6, v6] = amplifier_select(2, x, 1000000, 2);
  CHECK(mu3 == mu6);
  // The q-corrections decay like q^{-1}.
  CHECK(std::abs(v6 - v3) < 1e-2);
  VirtualCharacter s = satake_omega(2, mu6);
  LaurentHalfQ lead = s.terms.at(mu6);
  CHECK(lead == LaurentHalfQ::one());
}

TEST_CASE("levi_threshold_partition edge cases") {
  ThresholdTable table;
  table.C1 = {2.0, 2.0, 2.0};
  table.C2 = {1.5, 1.5, 1.5};

  std::vector<C> spread = {C(100, 0), C(1, 0), C(0.01, 0)};  // huge |alpha(x)|
  CHECK(levi_threshold_partition(3, spread, table).empty());

  std::vector<C> ones = {C(1, 0), C(1, 0), C(1, 0)};
  auto all = levi_threshold_partition(3, ones, table);
  CHECK(all == std::vector<int>{0, 1});

  std::vector<C> mixed = {C(1, 0), C(1, 0), C(0.02, 0)};  // |a1|=1, |a2| large
  auto theta = levi_threshold_partition(3, mixed, table);
  CHECK(theta == std::vector<int>{0});
}

TEST_CASE("levi_threshold_partition rejects non-monotone tables") {
  ThresholdTable bad;
  bad.C1 = {2.0, 1.0, 0.5};
  bad.C2 = {3.0, 3.0, 3.0};
  std::vector<C> ones = {C(1, 0), C(1, 0), C(1, 0)};
  CHECK_THROWS_AS(levi_threshold_partition(3, ones, bad), ContractError);
}
