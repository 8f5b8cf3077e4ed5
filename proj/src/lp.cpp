#include "liecomb/lp.hpp"

#include <limits>

#include "liecomb/errors.hpp"

namespace liecomb {

namespace {

// Dense simplex tableau over exact rationals.  Standard form:
//   minimize c.x  s.t.  A x = b, x >= 0, b >= 0 after sign fixing.
class Simplex {
 public:
  Simplex(RMat A, RVec b, RVec c)
      : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
    m_ = A_.rows();
    n_ = A_.cols();
  }

  // Two-phase solve; returns status, fills value/point on Optimal.
  LPStatus run(Rational& value, RVec& point) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (b_[i] < 0) {
        A_.row(i) = -A_.row(i);
        b_[i] = -b_[i];
      }
    }
    // Phase 1: artificial basis.
    Eigen::Index n_total = n_ + m_;
    T_.setZero(m_ + 1, n_total + 1);
    T_.block(0, 0, m_, n_) = A_;
    for (Eigen::Index i = 0; i < m_; ++i) T_(i, n_ + i) = 1;
    T_.col(n_total).head(m_) = b_;
    basis_.resize(static_cast<size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<size_t>(i)] = n_ + i;
    // Phase-1 objective: sum of artificials, expressed in nonbasic terms.
    for (Eigen::Index j = 0; j <= n_total; ++j) {
      Rational s = 0;
      for (Eigen::Index i = 0; i < m_; ++i) s += T_(i, j);
      T_(m_, j) = -s;
    }
    for (Eigen::Index i = 0; i < m_; ++i) T_(m_, n_ + i) = 0;
    pivot_until_optimal(n_total);
    if (T_(m_, n_total) != 0) return LPStatus::Infeasible;
    // Drive remaining artificials out of the basis if possible.
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<size_t>(i)] >= n_) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < n_; ++j) {
          if (T_(i, j) != 0) {
            enter = j;
            break;
          }
        }
        if (enter >= 0) pivot(i, enter);
        // A fully-zero structural row is redundant; the artificial stays
        // basic at zero and never re-enters play.
      }
    }
    // Phase 2: install the real objective.
    for (Eigen::Index j = 0; j <= n_total; ++j) T_(m_, j) = 0;
    for (Eigen::Index j = 0; j < n_; ++j) T_(m_, j) = c_[j];
    for (Eigen::Index i = 0; i < m_; ++i) {
      Eigen::Index bj = basis_[static_cast<size_t>(i)];
      if (bj < n_ && c_[bj] != 0) T_.row(m_) -= c_[bj] * T_.row(i);
    }
    if (!pivot_until_optimal(n_, /*phase2=*/true)) return LPStatus::Unbounded;
    value = -T_(m_, n_total);
    point = RVec::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      Eigen::Index bj = basis_[static_cast<size_t>(i)];
      if (bj < n_) point[bj] = T_(i, n_total);
    }
    return LPStatus::Optimal;
  }

 private:
  void pivot(Eigen::Index row, Eigen::Index col) {
    Rational inv = Rational(1) / T_(row, col);
    T_.row(row) *= inv;
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i != row && T_(i, col) != 0) {
        Rational f = T_(i, col);
        T_.row(i) -= f * T_.row(row);
      }
    }
    basis_[static_cast<size_t>(row)] = col;
  }

  // Bland's rule: entering = smallest index with negative reduced cost,
  // leaving = smallest basis index among minimal ratios.
  bool pivot_until_optimal(Eigen::Index n_cols, bool phase2 = false) {
    Eigen::Index rhs = T_.cols() - 1;
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < n_cols; ++j) {
        if (T_(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (T_(i, enter) > 0) {
          Rational ratio = T_(i, rhs) / T_(i, enter);
          if (leave < 0 || ratio < best ||
              (ratio == best &&
               basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return !phase2 ? true : false;
      pivot(leave, enter);
    }
  }

  RMat A_;
  RVec b_;
  RVec c_;
  RMat T_;
  Eigen::Index m_ = 0, n_ = 0;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
  Eigen::Index n = lp.objective.size();
  Eigen::Index n_ge = static_cast<Eigen::Index>(lp.ge_rows.size());
  Eigen::Index n_eq = static_cast<Eigen::Index>(lp.eq_rows.size());
  Eigen::Index m = n_ge + n_eq;
  // Split x = u - v with u,v >= 0; ge rows get a surplus variable.
  Eigen::Index cols = 2 * n + n_ge;
  RMat A = RMat::Zero(m, cols);
  RVec b(m);
  RVec c = RVec::Zero(cols);
  for (Eigen::Index j = 0; j < n; ++j) {
    c[j] = lp.objective[j];
    c[n + j] = -lp.objective[j];
  }
  for (Eigen::Index i = 0; i < n_ge; ++i) {
    const RVec& row = lp.ge_rows[static_cast<size_t>(i)];
    if (row.size() != n) throw ContractError("solve_lp: row dimension mismatch");
    A.row(i).head(n) = row.transpose();
    A.row(i).segment(n, n) = -row.transpose();
    A(i, 2 * n + i) = -1;
    b[i] = lp.ge_rhs[static_cast<size_t>(i)];
  }
  for (Eigen::Index i = 0; i < n_eq; ++i) {
    const RVec& row = lp.eq_rows[static_cast<size_t>(i)];
    if (row.size() != n) throw ContractError("solve_lp: row dimension mismatch");
    A.row(n_ge + i).head(n) = row.transpose();
    A.row(n_ge + i).segment(n, n) = -row.transpose();
    b[n_ge + i] = lp.eq_rhs[static_cast<size_t>(i)];
  }
  Simplex sx(std::move(A), std::move(b), std::move(c));
  LPResult res;
  RVec raw;
  res.status = sx.run(res.value, raw);
  if (res.status == LPStatus::Optimal) {
    res.point = RVec(n);
    for (Eigen::Index j = 0; j < n; ++j) res.point[j] = raw[j] - raw[n + j];
  }
  return res;
}

}  // namespace liecomb
