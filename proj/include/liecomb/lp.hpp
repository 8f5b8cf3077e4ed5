#pragma once

#include <vector>

#include "liecomb/rational.hpp"

namespace liecomb {

// Exact-rational linear program in the form
//   minimize  c.x
//   subject to A_ge x >= b_ge, A_eq x = b_eq, x free.
// Free variables are split internally; Bland's rule prevents cycling.
struct LinearProgram {
  RVec objective;
  std::vector<RVec> ge_rows;
  std::vector<Rational> ge_rhs;
  std::vector<RVec> eq_rows;
  std::vector<Rational> eq_rhs;

  void add_ge(const RVec& row, const Rational& rhs) {
    ge_rows.push_back(row);
    ge_rhs.push_back(rhs);
  }
  void add_le(const RVec& row, const Rational& rhs) { add_ge(-row, -rhs); }
  void add_eq(const RVec& row, const Rational& rhs) {
    eq_rows.push_back(row);
    eq_rhs.push_back(rhs);
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;  // optimal objective when status == Optimal
  RVec point;      // a minimizer
};

LPResult solve_lp(const LinearProgram& lp);

}  // namespace liecomb
