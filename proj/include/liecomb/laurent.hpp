#pragma once

#include <map>
#include <sstream>
#include <string>

#include "liecomb/errors.hpp"
#include "liecomb/rational.hpp"

namespace liecomb {

// Finitely supported Laurent polynomial in q^{1/2} with rational
// coefficients, stored by doubled exponent (key k means q^{k/2}).
struct LaurentHalfQ {
  std::map<int, Rational> coeff;

  static LaurentHalfQ one() {
    LaurentHalfQ p;
    p.coeff[0] = 1;
    return p;
  }
  static LaurentHalfQ monomial_half(int doubled_exp, Rational c = 1) {
    LaurentHalfQ p;
    if (c != 0) p.coeff[doubled_exp] = std::move(c);
    return p;
  }

  bool is_zero() const { return coeff.empty(); }

  void add_term(int doubled_exp, const Rational& c) {
    if (c == 0) return;
    Rational& slot = coeff[doubled_exp];
    slot += c;
    if (slot == 0) coeff.erase(doubled_exp);
  }

  friend LaurentHalfQ operator+(const LaurentHalfQ& a, const LaurentHalfQ& b) {
    LaurentHalfQ r = a;
    for (const auto& [e, c] : b.coeff) r.add_term(e, c);
    return r;
  }
  friend LaurentHalfQ operator-(const LaurentHalfQ& a, const LaurentHalfQ& b) {
    LaurentHalfQ r = a;
    for (const auto& [e, c] : b.coeff) r.add_term(e, -c);
    return r;
  }
  friend LaurentHalfQ operator*(const LaurentHalfQ& a, const LaurentHalfQ& b) {
    LaurentHalfQ r;
    for (const auto& [ea, ca] : a.coeff)
      for (const auto& [eb, cb] : b.coeff) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentHalfQ& a, const LaurentHalfQ& b) {
    return a.coeff == b.coeff;
  }

  bool integral_powers() const {
    for (const auto& [e, c] : coeff)
      if (e % 2) return false;
    return true;
  }

  // Exact evaluation; requires every exponent to be integral.
  Rational eval(const Rational& q) const {
    Rational total = 0;
    for (const auto& [e, c] : coeff) {
      if (e % 2) throw ContractError("LaurentHalfQ::eval: half-integral exponent");
      int k = e / 2;
      Rational pw = 1;
      Rational base = k < 0 ? Rational(1) / q : q;
      for (int i = 0; i < (k < 0 ? -k : k); ++i) pw *= base;
      total += c * pw;
    }
    return total;
  }

  std::string str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << " + ";
      first = false;
      os << c;
      if (e != 0) {
        os << "*q^";
        if (e % 2)
          os << "(" << e << "/2)";
        else
          os << (e / 2);
      }
    }
    return os.str();
  }
};

// Polynomial in t with integer coefficients, exponent -> coefficient.
using TPoly = std::map<int, Int>;

inline TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Int& slot = r[ea + eb];
      slot += ca * cb;
      if (slot == 0) r.erase(ea + eb);
    }
  return r;
}

inline void tpoly_sub_inplace(TPoly& a, const TPoly& b) {
  for (const auto& [e, c] : b) {
    Int& slot = a[e];
    slot -= c;
    if (slot == 0) a.erase(e);
  }
}

}  // namespace liecomb
