#include <doctest.h>

#include <set>
#include <vector>

#include "liecomb/buildings.hpp"

using namespace liecomb;

TEST_CASE("delta_profile examples") {
  RootDatum gl2 = build_root_datum(Family::A, 1);
  DeltaProfile zero = delta_profile(gl2, rvec({0, 0}));
  CHECK(zero.values.empty());
  CHECK(zero.total == 0);

  DeltaProfile coroot = delta_profile(gl2, rvec({1, -1}));
  CHECK(coroot.values == std::vector<long>{1, 1});
  CHECK(coroot.total == 2);

  RootDatum gl3 = build_root_datum(Family::A, 2);
  DeltaProfile p = delta_profile(gl3, rvec({2, 1, 0}));
  CHECK(p.values == std::vector<long>{3, 1});
  CHECK(p.total == 4);
}

TEST_CASE("delta_profile total telescopes to the star norm") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::C, 3}, {Family::G2, 2}}) {
    RootDatum d = build_root_datum(f, r);
    std::vector<RVec> mus;
    if (f == Family::A)
      mus = {rvec({3, 1, 0}), rvec({2, 2, 1})};
    else if (f == Family::C)
      mus = {rvec({2, 1, 0}), rvec({3, 2, 2})};
    else
      mus = {rvec({2, 1}), rvec({3, 0})};
    for (const RVec& mu : mus)
      CHECK(delta_profile(d, mu).total == star_norm2(d, mu));
  }
}

TEST_CASE("sphere_size_polynomial examples") {
  RootDatum gl2 = build_root_datum(Family::A, 1);
  QPoly q10 = sphere_size_polynomial(gl2, rvec({1, 0}));
  CHECK(q10 == QPoly{{0, 1}, {1, 1}});  // q + 1
  QPoly q20 = sphere_size_polynomial(gl2, rvec({2, 0}));
  CHECK(q20 == QPoly{{1, 1}, {2, 1}});  // q^2 + q
  QPoly q0 = sphere_size_polynomial(gl2, rvec({0, 0}));
  CHECK(q0 == QPoly{{0, 1}});

  RootDatum gl3 = build_root_datum(Family::A, 2);
  QPoly line = sphere_size_polynomial(gl3, rvec({1, 0, 0}));
  CHECK(line == QPoly{{0, 1}, {1, 1}, {2, 1}});  // q^2 + q + 1
}

TEST_CASE("qpoly_eval and degree") {
  QPoly f = {{0, 1}, {2, 3}};
  CHECK(qpoly_eval(f, 2) == 13);
  CHECK(qpoly_eval(f, Rational(1, 2)) == Rational(7, 4));
  CHECK(qpoly_degree(f) == 2);
}

TEST_CASE("sphere polynomial agrees with Hermite enumeration") {
  for (long p : {2L, 3L}) {
    for (const RVec& mu : {rvec({1, 0}), rvec({2, 0}), rvec({2, 1}), rvec({1, 1})}) {
      RootDatum gl2 = build_root_datum(Family::A, 1);
      Rational predicted = qpoly_eval(sphere_size_polynomial(gl2, mu), p);
      CHECK(Rational(static_cast<long>(hnf_sphere(2, mu, p).size())) == predicted);
    }
  }
  RootDatum gl3 = build_root_datum(Family::A, 2);
  for (const RVec& mu : {rvec({1, 0, 0}), rvec({1, 1, 0}), rvec({2, 1, 0})}) {
    Rational predicted = qpoly_eval(sphere_size_polynomial(gl3, mu), 2);
    CHECK(Rational(static_cast<long>(hnf_sphere(3, mu, 2).size())) == predicted);
  }
}

TEST_CASE("hnf_sphere representatives have the prescribed Smith form") {
  RVec mu = rvec({2, 1});
  for (const RMat& rep : hnf_sphere(2, mu, 3)) {
    std::vector<long> snf = snf_exponents(rep, 3);
    CHECK(snf == std::vector<long>{2, 1});
  }
}

TEST_CASE("snf_exponents basic facts") {
  RMat m = RMat::Zero(2, 2);
  m(0, 0) = 9;
  m(1, 1) = 3;
  CHECK(snf_exponents(m, 3) == std::vector<long>{2, 1});

  RMat u = RMat::Zero(2, 2);  // unimodular column operation preserves SNF
  u(0, 0) = 1;
  u(0, 1) = 5;
  u(1, 1) = 1;
  RMat mu_prod = m * u;
  CHECK(snf_exponents(mu_prod, 3) == std::vector<long>{2, 1});

  RMat anti = RMat::Zero(2, 2);
  anti(0, 1) = 4;
  anti(1, 0) = 2;
  CHECK(snf_exponents(anti, 2) == std::vector<long>{2, 1});
}

TEST_CASE("det_exact and p_valuation") {
  RMat m = RMat::Zero(3, 3);
  m(0, 0) = 2;
  m(0, 2) = 1;
  m(1, 1) = Rational(1, 3);
  m(2, 0) = 1;
  m(2, 2) = 1;
  CHECK(det_exact(m) == Rational(1, 3));
  CHECK(p_valuation(Rational(12), 2) == 2);
  CHECK(p_valuation(Rational(1, 9), 3) == -2);
  CHECK(p_valuation(Rational(5), 3) == 0);
}

TEST_CASE("intersection counts for the stated configurations") {
  IntersectionConfig torus;
  torus.kind = IntersectionConfig::Kind::TorusGL2;
  torus.p = 3;
  CHECK(intersection_count(torus, rvec({1, 0})) == 2);
  CHECK(intersection_count(torus, rvec({0, 0})) == 1);

  IntersectionConfig full;
  full.kind = IntersectionConfig::Kind::FullGL2;
  full.p = 2;
  CHECK(intersection_count(full, rvec({1, 0})) == 3);
  CHECK(intersection_count(full, rvec({0, 0})) == 1);

  IntersectionConfig diag;
  diag.kind = IntersectionConfig::Kind::DiagGL2;
  diag.p = 2;
  CHECK(intersection_count(diag, rvec({1, 0, 0, 0})) == 0);
  CHECK(intersection_count(diag, rvec({0, 0, 0, 0})) == 1);
  CHECK(intersection_count(diag, rvec({1, 0, 1, 0})) > 0);
}

TEST_CASE("diagonal PGL2 avoids all (nu,0) shapes") {
  IntersectionConfig diag;
  diag.kind = IntersectionConfig::Kind::DiagPGL2;
  diag.p = 2;
  for (long a = 1; a <= 3; ++a) {
    for (long b = 0; b < a; ++b) {
      RVec mu = rvec({a, b, 0, 0});
      CHECK(intersection_count(diag, mu) == 0);
    }
  }
  // Same conclusion under a unimodular twist.
  RMat y = RMat::Zero(2, 2);
  y(0, 0) = 1;
  y(0, 1) = 3;
  y(1, 0) = 1;
  y(1, 1) = 4;
  diag.y1 = y;
  CHECK(intersection_count(diag, rvec({2, 0, 0, 0})) == 0);
}

TEST_CASE("torus count is invariant under the Weyl swap") {
  IntersectionConfig torus;
  torus.kind = IntersectionConfig::Kind::TorusGL2;
  torus.p = 3;
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= a; ++b)
      CHECK(intersection_count(torus, rvec({a, b})) ==
            intersection_count(torus, rvec({a + 1, b + 1})) );
}

TEST_CASE("buildingcount_check examples") {
  IntersectionConfig torus;
  torus.kind = IntersectionConfig::Kind::TorusGL2;
  torus.p = 3;
  BuildingCountReport r1 = buildingcount_check(torus, rvec({2, 0}));
  CHECK(r1.count == 2);
  CHECK(r1.bound == 1);
  CHECK(r1.ratio == doctest::Approx(2.0));

  IntersectionConfig full;
  full.kind = IntersectionConfig::Kind::FullGL2;
  full.p = 2;
  BuildingCountReport r2 = buildingcount_check(full, rvec({1, 0}));
  CHECK(r2.count == 3);
  CHECK(r2.bound == 2);
  CHECK(r2.ratio == doctest::Approx(1.5));
}

TEST_CASE("intersection counts stay within a bounded multiple of the bound") {
  IntersectionConfig torus;
  torus.kind = IntersectionConfig::Kind::TorusGL2;
  for (long p : {2L, 3L}) {
    torus.p = p;
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= a; ++b) {
        BuildingCountReport r = buildingcount_check(torus, rvec({a, b}));
        if (r.bound != 0) CHECK(r.ratio <= 4.0);
      }
  }
}
