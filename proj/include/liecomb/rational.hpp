#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Boost.Multiprecision before 1.76 probes arbitrary types with its
// byte-container trait during convertibility checks; Eigen 3.4 expressions
// declare const_iterator as void for 2-d shapes, which makes that trait a
// hard error inside overload resolution.  Declare Eigen expressions as
// non-containers so the probe short-circuits.
namespace boost {
namespace multiprecision {
namespace detail {
template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> {
  static const bool value = false;
};
template <typename X>
struct is_byte_container<Eigen::Transpose<X>> {
  static const bool value = false;
};
template <typename L, typename R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> {
  static const bool value = false;
};
template <typename Op, typename L, typename R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> {
  static const bool value = false;
};
template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> {
  static const bool value = false;
};
template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, X>> {
  static const bool value = false;
};
template <typename X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>> {
  static const bool value = false;
};
}  // namespace detail
}  // namespace multiprecision
}  // namespace boost

namespace liecomb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RVec = Vec<Rational>;
using RMat = Mat<Rational>;

inline RVec rvec(std::initializer_list<Rational> xs) {
  RVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline RVec rvec(const std::vector<long>& xs) {
  RVec v(static_cast<Eigen::Index>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
  return v;
}

inline Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline long to_long(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("to_long: non-integral rational");
  return static_cast<long>(numerator(x));
}

inline std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string to_string(const RVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

inline Rational sup_norm(const RVec& v) {
  Rational m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational a = v[i] < 0 ? Rational(-v[i]) : v[i];
    if (a > m) m = a;
  }
  return m;
}

// Lexicographic compare, used for canonical orderings of vector sets.
inline bool lex_less(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct RVecLess {
  bool operator()(const RVec& a, const RVec& b) const { return lex_less(a, b); }
};

// Parses "a", "a/b" into an exact rational.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace liecomb
