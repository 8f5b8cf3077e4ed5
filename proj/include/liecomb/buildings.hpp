#pragma once

#include <vector>

#include "liecomb/laurent.hpp"
#include "liecomb/root_datum.hpp"

namespace liecomb {

struct DeltaProfile {
  RVec mu;
  std::vector<long> values;  // delta(mu,0), delta(mu,1), ... last entry nonzero
  Rational total;
};

// delta(mu,k) = #{alpha in Delta : <alpha,mu> > k}; total telescopes to
// star_norm2(mu).
DeltaProfile delta_profile(const RootDatum& datum, const RVec& mu);

// Polynomial in q, exponent -> coefficient.
using QPoly = std::map<int, Int>;

Rational qpoly_eval(const QPoly& f, const Rational& q);
int qpoly_degree(const QPoly& f);

// |F_mu|(q) = (sum over minimal coset reps of W/W_theta of q^length) times
// q^{sum_{k>=1} delta(mu,k)}, theta = simples annihilating mu.
QPoly sphere_size_polynomial(const RootDatum& datum, const RVec& mu);

// Exact determinant by cofactor expansion (desk-size matrices).
Rational det_exact(const RMat& M);

// p-adic valuation of a nonzero rational.
long p_valuation(const Rational& x, long p);

// Elementary-divisor exponents of a nonsingular matrix over Z_p, weakly
// decreasing, via minor valuations.
std::vector<long> snf_exponents(const RMat& M, long p);

// Hermite representatives of the sphere K mu(p) K / K for GL_n: upper
// triangular, p-power diagonal, row-reduced entries, Smith form mu.
std::vector<RMat> hnf_sphere(int n, const RVec& mu, long p);

struct IntersectionConfig {
  enum class Kind { DiagGL2, DiagPGL2, TorusGL2, FullGL2 };
  Kind kind = Kind::FullGL2;
  long p = 2;
  RMat y1 = RMat::Identity(2, 2);  // unimodular twists
  RMat y2 = RMat::Identity(2, 2);
};

// Exact cardinality of (L K cap K mu(p) K)/K; mu is a 4-vector (mu1,mu2
// concatenated) for the diagonal kinds, a 2-vector otherwise.
Int intersection_count(const IntersectionConfig& config, const RVec& mu);

struct BuildingCountReport {
  Int count = 0;
  Rational bound = 1;  // p^{star_norm2_H of the H-side shape}, 0 when the
                       // Weyl orbit misses the H-cocharacter lattice
  double ratio = 0.0;
};

BuildingCountReport buildingcount_check(const IntersectionConfig& config, const RVec& mu);

}  // namespace liecomb
