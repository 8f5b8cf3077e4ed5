#pragma once

#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "liecomb/errors.hpp"
#include "liecomb/gaussian.hpp"
#include "liecomb/root_datum.hpp"

namespace liecomb {

// Torus point: one nonzero scalar per ambient coordinate.  Exact Gaussian
// rationals keep the singular acceptance points (x = i) exact; complex
// doubles serve the sampling harnesses.
template <typename S>
using TorusPoint = std::vector<S>;

struct CharacterTable {
  LatticeVector highest_weight;
  std::map<RVec, long, RVecLess> multiplicities;  // weight -> positive count

  long dimension() const {
    long d = 0;
    for (const auto& [w, m] : multiplicities) d += m;
    return d;
  }
};

// Product of <lam + rho, alpha^> / <rho, alpha^> over positive coroots.
Rational weyl_dimension(const RootDatum& datum, const LatticeVector& lam);

// Freudenthal recursion over the dominance downset, spread to full Weyl
// orbits.  Throws ResourceError when the Weyl dimension exceeds the cap.
CharacterTable weight_multiplicities(const RootDatum& datum, const LatticeVector& lam,
                                     long dim_cap = 100000);

template <typename S>
S char_value(const RootDatum& datum, const CharacterTable& table,
             const TorusPoint<S>& x) {
  if (static_cast<int>(x.size()) != datum.ambient_dim)
    throw ContractError("char_value: torus point dimension mismatch");
  S total = scalar_from_long(static_cast<S*>(nullptr), 0);
  for (const auto& [w, mult] : table.multiplicities) {
    S term = scalar_from_long(static_cast<S*>(nullptr), mult);
    for (Eigen::Index i = 0; i < w.size(); ++i)
      term *= power(x[static_cast<size_t>(i)], to_long(w[i]));
    total += term;
  }
  return total;
}

template <typename S>
S char_value(const RootDatum& datum, const LatticeVector& lam, const TorusPoint<S>& x,
             long dim_cap = 100000) {
  return char_value(datum, weight_multiplicities(datum, lam, dim_cap), x);
}

// Weyl quotient form, valid at regular points only; used as a floating
// cross-check of the multiplicity sum.
std::complex<double> char_value_weyl_quotient(const RootDatum& datum,
                                              const LatticeVector& lam,
                                              const TorusPoint<std::complex<double>>& x);

// lambda_L = 2rho - 2rho_L for the Levi generated by the simples in theta.
LatticeVector levi_lambda(const RootDatum& datum, const std::vector<int>& theta);

// Coefficients of lambda_L - w(lambda_L) in the simple-root basis, indexed
// by simple position.
std::vector<Rational> lambdashift_decomposition(const RootDatum& datum,
                                                const std::vector<int>& theta,
                                                const std::vector<int>& word);

// Dominant candidates for the search harnesses: nonzero, sup-norm <= R,
// graded-lexicographic order; type A candidates are normalized to last
// coordinate 0 so central characters are excluded.
std::vector<RVec> search_candidates(const RootDatum& datum, int R);

template <typename S>
std::pair<LatticeVector, S> nonvanishing_search(const RootDatum& datum,
                                                const TorusPoint<S>& x, int R,
                                                long dim_cap = 100000) {
  if (R < 1) throw ContractError("nonvanishing_search: R >= 1");
  std::vector<RVec> cands = search_candidates(datum, R);
  bool found = false;
  RVec best_mu;
  S best_val = scalar_from_long(static_cast<S*>(nullptr), 0);
  for (const RVec& mu : cands) {
    S v = char_value(datum, LatticeVector::weight(mu), x, dim_cap);
    if (!found || abs2(v) > abs2(best_val)) {
      found = true;
      best_mu = mu;
      best_val = v;
    }
  }
  if (!found || !(abs2(best_val) > 0))
    throw ExhaustionError("nonvanishing_search: all candidates vanish at x");
  return {LatticeVector::weight(best_mu), best_val};
}

template <typename S>
long shift_to_nonvanishing(const RootDatum& datum, const std::vector<int>& theta,
                           const LatticeVector& mu, const TorusPoint<S>& x, long k_max,
                           double tol = 1e-9) {
  LatticeVector lamL = levi_lambda(datum, theta);
  for (long k = 0; k <= k_max; ++k) {
    RVec shifted = mu.coords + Rational(k) * lamL.coords;
    LatticeVector cand{shifted, Side::Weight};
    if (!datum.is_dominant(cand)) continue;
    S v = char_value(datum, cand, x);
    double a2;
    if constexpr (std::is_same_v<S, GaussianRational>)
      a2 = to_double(abs2(v));
    else
      a2 = abs2(v);
    if (a2 > tol * tol) return k;
  }
  throw ExhaustionError("shift_to_nonvanishing: no k within k_max");
}

}  // namespace liecomb
