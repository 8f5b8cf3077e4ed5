#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "liecomb/laurent.hpp"
#include "liecomb/root_datum.hpp"

namespace liecomb {

using Partition = std::vector<long>;  // weakly decreasing, nonnegative

// Charge-statistic Kostka-Foulkes polynomial K_{lam,mu}(t); zero unless
// mu <= lam in dominance, K_{lam,lam} = 1.
TPoly kostka_foulkes(const Partition& lam, const Partition& mu);

// All partitions of n with at most parts parts.
std::vector<Partition> partitions_of(long n, int parts);

// Finite map dominant weight -> Laurent coefficient; houses the Satake
// expansion chi_mu + sum_{lam < mu} C(lam,mu,q) chi_lam.
struct VirtualCharacter {
  std::map<RVec, LaurentHalfQ, RVecLess> terms;
};

// Exact Satake transform of omega_mu for GL_n, symbolic in q, via the
// inverse Kostka-Foulkes matrix at t = q^{-1}.
VirtualCharacter satake_omega(int n, const RVec& mu);

// Definitional oracle: unipotent-integral discretization at a prime, with
// Smith-form membership tests, re-expressed in the character basis.
struct BruteforceSatake {
  std::map<RVec, Rational, RVecLess> terms;
  long sphere_size = 0;
};
BruteforceSatake satake_bruteforce(int n, const RVec& mu, long p);

// Expansion of omega_mu * omega_nu in the omega basis at a prime, computed
// from Hermite-coset convolution.
std::map<RVec, Rational, RVecLess> convolution_omega(int n, const RVec& mu,
                                                     const RVec& nu, long p);

// Evaluates the expansion at a Satake parameter x on the dual torus.
std::complex<double> satake_eval(int n, const VirtualCharacter& vc, const Rational& q,
                                 const std::vector<std::complex<double>>& x);

// Argmax of |S omega_mu(x)| over nonzero normalized dominant mu with
// sup-norm <= R, graded-lex tie-breaking.
std::pair<RVec, std::complex<double>> amplifier_select(
    int n, const std::vector<std::complex<double>>& x, const Rational& q, int R);

// Threshold tables keyed by |theta|; monotonicity C1[s+1] >= max(C1[s],
// C2[s]) is the precondition of the recursion.
struct ThresholdTable {
  std::vector<double> C1;  // size n (subset sizes 0..n-1)
  std::vector<double> C2;
};

std::vector<int> levi_threshold_partition(int n,
                                          const std::vector<std::complex<double>>& x,
                                          const ThresholdTable& thresholds);

}  // namespace liecomb
