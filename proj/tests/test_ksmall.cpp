#include <doctest.h>

#include "liecomb/buildings.hpp"
#include "liecomb/errors.hpp"
#include "liecomb/ksmall.hpp"

using namespace liecomb;

TEST_CASE("iota matrices for the stated embeddings") {
  CocharEmbedding sosl = build_embedding("so-sl", 2);
  CHECK(RVec(sosl.iota * rvec({1, 2})) == rvec({1, 2, -2, -1}));

  CocharEmbedding glsp = build_embedding("gl-sp", 2);
  CHECK(RVec(glsp.iota * rvec({3, -1})) == rvec({3, -1}));

  CocharEmbedding g2 = build_embedding("su2-g2", 2);
  CHECK(RVec(g2.iota * rvec({1, 0})) == rvec({1, 0}));

  CocharEmbedding odd = build_embedding("so-sl-odd", 2);
  CHECK(RVec(odd.iota * rvec({1, 2})) == rvec({1, 2, 0, -2, -1}));
}

TEST_CASE("build_embedding rejects out-of-range sizes") {
  CHECK_THROWS_AS(build_embedding("so-sl", 5), CapabilityError);
  CHECK_THROWS_AS(build_embedding("gl-sp", 1), CapabilityError);
  CHECK_THROWS_AS(build_embedding("su2-g2", 3), CapabilityError);
  CHECK_THROWS_AS(build_embedding("nope", 2), CapabilityError);
}

TEST_CASE("all tags build and iota is injective on a basis") {
  for (const std::string& tag : embedding_tags()) {
    int size = tag == "so-so-odd" || tag == "so-odd-odd" || tag == "su2-g2" ? 2
               : tag == "gl-sp" || tag == "so-so-even"                      ? 2
                                                                            : 1;
    CocharEmbedding E = build_embedding(tag, size);
    CHECK(E.iota.rows() == E.G_datum.ambient_dim);
    CHECK(E.iota.cols() == E.K_datum.ambient_dim);
    RMat gram = E.iota.transpose() * E.iota;
    CHECK(det_exact(gram) > 0);  // injective on the lattice
  }
}

TEST_CASE("defect2 examples") {
  CocharEmbedding sosl = build_embedding("so-sl", 2);
  CHECK(defect2(sosl, rvec({1, 0})) == 2);
  CHECK(defect2(sosl, rvec({0, 0})) == 0);
  CocharEmbedding glsp = build_embedding("gl-sp", 2);
  CHECK(defect2(glsp, rvec({1, -1})) == 2);
}

TEST_CASE("defect2 is W_K invariant") {
  CocharEmbedding E = build_embedding("gl-sp", 3);
  RVec mu = rvec({2, -1, 1});
  Rational base = defect2(E, mu);
  for (const RVec& u : weyl_orbit(E.K_datum, LatticeVector::coweight(mu)))
    CHECK(defect2(E, u) == base);
}

TEST_CASE("min_lattice_defect examples") {
  CocharEmbedding sosl = build_embedding("so-sl", 2);
  auto [v1, w1] = min_lattice_defect(sosl, 2);
  CHECK(v1 == 2);
  CHECK(w1 == rvec({1, 0}));

  CocharEmbedding glsp = build_embedding("gl-sp", 2);
  auto [v2, w2] = min_lattice_defect(glsp, 2);
  CHECK(v2 == 2);
  CHECK(w2 == rvec({1, 0}));
}

TEST_CASE("min_lattice_defect is consistent with pointwise defect2") {
  CocharEmbedding E = build_embedding("so-sl-odd", 1);
  auto [v, w] = min_lattice_defect(E, 1);
  CHECK(defect2(E, w) == v);
  CHECK(defect2(E, rvec({1})) >= v);
  CHECK(defect2(E, rvec({-1})) >= v);
}

TEST_CASE("verify_ksmall degenerate k=1 case") {
  KSmallCertificate cert = verify_ksmall(build_embedding("so-sl", 1));
  CHECK(cert.kappa2_lower == 2);
  CHECK(cert.verdict);
}

TEST_CASE("verify_ksmall SO(2,2) in SL4") {
  KSmallCertificate cert = verify_ksmall(build_embedding("so-sl", 2));
  CHECK(cert.kappa2_lower == 2);
  CHECK(cert.kappa2_lattice == 2);
  CHECK(cert.witness_mu == rvec({1, 0}));
  CHECK(cert.verdict);
}

TEST_CASE("verify_ksmall G2 case is positive") {
  KSmallCertificate cert = verify_ksmall(build_embedding("su2-g2", 2));
  CHECK(cert.verdict);
  CHECK(cert.kappa2_lower == Rational(4, 3));
  CHECK(cert.kappa2_lattice == 2);
}

TEST_CASE("certificates are sound on the lattice box") {
  for (const std::string& tag : {"so-sl", "gl-sp", "so-so-odd"}) {
    CocharEmbedding E = build_embedding(tag, 2);
    KSmallCertificate cert = verify_ksmall(E);
    CHECK(cert.kappa2_lattice >= cert.kappa2_lower);
    CHECK(defect2(E, cert.witness_mu) == cert.kappa2_lattice);
  }
}

TEST_CASE("closed form for so-sl on the K-dominant chamber") {
  // On D3-dominant mu both norms are linear and the defect collapses to
  // 2(|x_1|+|x_2|+|x_3|); this cross-checks the LP pipeline pointwise.
  CocharEmbedding E = build_embedding("so-sl", 3);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        RVec mu = rvec({a, b, c});
        if (!E.K_datum.is_dominant(LatticeVector::coweight(mu))) continue;
        long expect = 2 * ((a < 0 ? -a : a) + (b < 0 ? -b : b) + (c < 0 ? -c : c));
        CHECK(defect2(E, mu) == expect);
      }
}
