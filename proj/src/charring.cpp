#include "liecomb/charring.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace liecomb {

namespace {

// W-invariant form on the weight side built from the positive coroots.
Rational bform(const RootDatum& d, const RVec& x, const RVec& y) {
  Rational s = 0;
  for (int i : d.positive_indices) s += dot(x, d.coroots[i]) * dot(y, d.coroots[i]);
  return s;
}

std::vector<Rational> key_of(const RVec& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

RVec vec_of(const std::vector<Rational>& k) {
  RVec v(static_cast<Eigen::Index>(k.size()));
  for (size_t i = 0; i < k.size(); ++i) v[static_cast<Eigen::Index>(i)] = k[i];
  return v;
}

}  // namespace

Rational weyl_dimension(const RootDatum& datum, const LatticeVector& lam) {
  if (!datum.is_dominant(lam)) throw ContractError("weyl_dimension: non-dominant weight");
  RVec rho = datum.two_rho / Rational(2);
  RVec shifted = lam.coords + rho;
  Rational num = 1, den = 1;
  for (int i : datum.positive_indices) {
    num *= dot(shifted, datum.coroots[i]);
    den *= dot(rho, datum.coroots[i]);
  }
  return num / den;
}

CharacterTable weight_multiplicities(const RootDatum& datum, const LatticeVector& lam,
                                     long dim_cap) {
  LatticeVector hw{lam.coords, Side::Weight};
  if (!datum.is_dominant(hw))
    throw ContractError("weight_multiplicities: non-dominant highest weight");
  Rational dim = weyl_dimension(datum, hw);
  if (!is_integer(dim) || numerator(dim) > dim_cap)
    throw ResourceError("weight_multiplicities: dimension cap exceeded");

  CharacterTable table;
  table.highest_weight = hw;
  if (datum.num_simple() == 0) {
    table.multiplicities[hw.coords] = 1;
    return table;
  }

  std::vector<RVec> simples;
  for (size_t k = 0; k < datum.num_simple(); ++k) simples.push_back(datum.simple_root(k));

  // Weight support: saturated set reached from lam by subtracting simple
  // roots; membership is "dominant representative lies below lam".
  auto is_weight = [&](const RVec& v) {
    auto [dom, w] = dominant_rep(datum, LatticeVector::weight(v));
    auto coeffs = decompose_in_basis(simples, hw.coords - dom.coords);
    if (!coeffs) return false;
    for (const Rational& c : *coeffs)
      if (c < 0 || !is_integer(c)) return false;
    return true;
  };
  std::set<std::vector<Rational>> support;
  std::queue<RVec> frontier;
  support.insert(key_of(hw.coords));
  frontier.push(hw.coords);
  while (!frontier.empty()) {
    RVec cur = frontier.front();
    frontier.pop();
    for (const RVec& a : simples) {
      RVec next = cur - a;
      if (support.count(key_of(next))) continue;
      if (!is_weight(next)) continue;
      support.insert(key_of(next));
      frontier.push(next);
    }
  }

  // Dominant members sorted by height of lam - mu, highest weight first.
  struct Dom {
    RVec mu;
    Rational level;
  };
  std::vector<Dom> doms;
  for (const auto& k : support) {
    RVec v = vec_of(k);
    if (!datum.is_dominant(LatticeVector::weight(v))) continue;
    auto coeffs = decompose_in_basis(simples, hw.coords - v);
    Rational lvl = 0;
    for (const Rational& c : *coeffs) lvl += c;
    doms.push_back({v, lvl});
  }
  std::sort(doms.begin(), doms.end(), [](const Dom& a, const Dom& b) {
    if (a.level != b.level) return a.level < b.level;
    return lex_less(a.mu, b.mu);
  });

  RVec rho = datum.two_rho / Rational(2);
  Rational top = bform(datum, hw.coords + rho, hw.coords + rho);
  std::map<std::vector<Rational>, Rational> dom_mult;
  auto mult_of = [&](const RVec& v) -> Rational {
    auto [dom, w] = dominant_rep(datum, LatticeVector::weight(v));
    auto it = dom_mult.find(key_of(dom.coords));
    return it == dom_mult.end() ? Rational(0) : it->second;
  };
  for (const Dom& d : doms) {
    if (d.level == 0) {
      dom_mult[key_of(d.mu)] = 1;
      continue;
    }
    Rational num = 0;
    for (int i : datum.positive_indices) {
      const RVec& alpha = datum.roots[i];
      for (long k = 1;; ++k) {
        RVec probe = d.mu + Rational(k) * alpha;
        if (!support.count(key_of(probe))) break;
        num += bform(datum, probe, alpha) * mult_of(probe);
      }
    }
    Rational den = top - bform(datum, d.mu + rho, d.mu + rho);
    if (den == 0) throw InternalError("weight_multiplicities: zero Freudenthal denominator");
    dom_mult[key_of(d.mu)] = 2 * num / den;
  }

  long total = 0;
  for (const auto& k : support) {
    RVec v = vec_of(k);
    Rational m = mult_of(v);
    if (!is_integer(m) || m <= 0)
      throw InternalError("weight_multiplicities: non-positive-integer multiplicity");
    long ml = to_long(m);
    table.multiplicities[v] = ml;
    total += ml;
  }
  if (Rational(total) != dim)
    throw InternalError("weight_multiplicities: dimension mismatch");
  return table;
}

std::complex<double> char_value_weyl_quotient(const RootDatum& datum,
                                              const LatticeVector& lam,
                                              const TorusPoint<std::complex<double>>& x) {
  RVec rho = datum.two_rho / Rational(2);
  auto monomial = [&](const RVec& e) {
    std::complex<double> m = 1.0;
    for (Eigen::Index i = 0; i < e.size(); ++i)
      m *= power(x[static_cast<size_t>(i)], to_long(e[i]));
    return m;
  };
  std::complex<double> num = 0.0;
  for (const WeylElement& w : enumerate_weyl(datum)) {
    RVec e = w.weight_action * (lam.coords + rho) - rho;
    double sign = w.length % 2 ? -1.0 : 1.0;
    num += sign * monomial(e);
  }
  std::complex<double> den = 1.0;
  for (int i : datum.positive_indices) den *= 1.0 - monomial(-datum.roots[i]);
  return num / den;
}

LatticeVector levi_lambda(const RootDatum& datum, const std::vector<int>& theta) {
  std::vector<RVec> theta_simples;
  for (int t : theta) {
    if (t < 0 || static_cast<size_t>(t) >= datum.num_simple())
      throw ContractError("levi_lambda: theta index out of range");
    theta_simples.push_back(datum.simple_root(static_cast<size_t>(t)));
  }
  RVec two_rho_L = RVec::Zero(datum.ambient_dim);
  for (int i : datum.positive_indices) {
    auto coeffs = decompose_in_basis(theta_simples, datum.roots[i]);
    if (!coeffs) continue;
    bool in_levi = true;
    for (const Rational& c : *coeffs)
      if (c < 0 || !is_integer(c)) in_levi = false;
    if (in_levi) two_rho_L += datum.roots[i];
  }
  RVec lamL = datum.two_rho - two_rho_L;
  // Lemma-style sanity: lamL vanishes on theta-coroots, is positive on the
  // rest.
  for (size_t k = 0; k < datum.num_simple(); ++k) {
    Rational p = dot(lamL, datum.simple_coroot(k));
    bool in_theta = std::find(theta.begin(), theta.end(), static_cast<int>(k)) != theta.end();
    if (in_theta ? p != 0 : p <= 0)
      throw InternalError("levi_lambda: pairing sign check failed");
  }
  return LatticeVector::weight(lamL);
}

std::vector<Rational> lambdashift_decomposition(const RootDatum& datum,
                                                const std::vector<int>& theta,
                                                const std::vector<int>& word) {
  RVec lamL = levi_lambda(datum, theta).coords;
  RVec moved = apply_word(datum, word, lamL, Side::Weight);
  std::vector<RVec> simples;
  for (size_t k = 0; k < datum.num_simple(); ++k) simples.push_back(datum.simple_root(k));
  auto coeffs = decompose_in_basis(simples, lamL - moved);
  if (!coeffs) throw InternalError("lambdashift_decomposition: outside root lattice");
  return *coeffs;
}

std::vector<RVec> search_candidates(const RootDatum& datum, int R) {
  int d = datum.ambient_dim;
  std::vector<RVec> out;
  long width = 2L * R + 1;
  long total = 1;
  for (int i = 0; i < d; ++i) total *= width;
  for (long code = 0; code < total; ++code) {
    long rest = code;
    RVec v(d);
    bool zero = true;
    for (int i = 0; i < d; ++i) {
      long c = rest % width - R;
      rest /= width;
      v[i] = c;
      if (c) zero = false;
    }
    if (zero) continue;
    if (datum.family == Family::A && v[d - 1] != 0) continue;
    if (!datum.is_dominant(LatticeVector::weight(v))) continue;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const RVec& a, const RVec& b) {
    Rational ga = 0, gb = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) ga += a[i] < 0 ? Rational(-a[i]) : a[i];
    for (Eigen::Index i = 0; i < b.size(); ++i) gb += b[i] < 0 ? Rational(-b[i]) : b[i];
    if (ga != gb) return ga < gb;
    return lex_less(a, b);
  });
  return out;
}

}  // namespace liecomb
