#include "liecomb/buildings.hpp"

#include <algorithm>

namespace liecomb {

DeltaProfile delta_profile(const RootDatum& datum, const RVec& mu) {
  DeltaProfile out;
  out.mu = mu;
  out.total = 0;
  for (long k = 0;; ++k) {
    long count = 0;
    for (const RVec& alpha : datum.roots)
      if (dot(alpha, mu) > k) ++count;
    if (count == 0) break;
    out.values.push_back(count);
    out.total += count;
  }
  return out;
}

Rational qpoly_eval(const QPoly& f, const Rational& q) {
  Rational total = 0;
  for (const auto& [e, c] : f) {
    Rational pw = 1;
    for (int i = 0; i < e; ++i) pw *= q;
    total += Rational(c) * pw;
  }
  return total;
}

int qpoly_degree(const QPoly& f) {
  int d = -1;
  for (const auto& [e, c] : f)
    if (c != 0) d = std::max(d, e);
  return d;
}

QPoly sphere_size_polynomial(const RootDatum& datum, const RVec& mu) {
  if (!datum.is_dominant(LatticeVector::coweight(mu)))
    throw ContractError("sphere_size_polynomial: mu must be dominant");
  std::vector<int> theta;
  for (size_t k = 0; k < datum.num_simple(); ++k)
    if (dot(datum.simple_root(k), mu) == 0) theta.push_back(static_cast<int>(k));
  // Minimal coset representatives of W/W_theta: w alpha positive for every
  // theta simple.
  QPoly flag;
  for (const WeylElement& w : enumerate_weyl(datum)) {
    bool minimal = true;
    for (int t : theta) {
      RVec image = w.weight_action * datum.simple_root(static_cast<size_t>(t));
      bool positive = false;
      for (int i : datum.positive_indices)
        if (datum.roots[i] == image) positive = true;
      if (!positive) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      Int& slot = flag[w.length];
      slot += 1;
    }
  }
  DeltaProfile prof = delta_profile(datum, mu);
  long shift = 0;
  for (size_t k = 1; k < prof.values.size(); ++k) shift += prof.values[k];
  QPoly out;
  for (const auto& [e, c] : flag) out[e + static_cast<int>(shift)] = c;
  return out;
}

Rational det_exact(const RMat& M) {
  Eigen::Index n = M.rows();
  if (M.cols() != n) throw ContractError("det_exact: square matrix required");
  if (n == 0) return 1;
  if (n == 1) return M(0, 0);
  Rational total = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (M(i, 0) == 0) continue;
    RMat minor(n - 1, n - 1);
    Eigen::Index r = 0;
    for (Eigen::Index ii = 0; ii < n; ++ii) {
      if (ii == i) continue;
      for (Eigen::Index jj = 1; jj < n; ++jj) minor(r, jj - 1) = M(ii, jj);
      ++r;
    }
    Rational term = M(i, 0) * det_exact(minor);
    total += (i % 2 ? -term : term);
  }
  return total;
}

long p_valuation(const Rational& x, long p) {
  if (x == 0) throw ContractError("p_valuation: zero input");
  Int num = numerator(x), den = denominator(x);
  if (num < 0) num = -num;
  long v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

std::vector<long> snf_exponents(const RMat& M, long p) {
  Eigen::Index n = M.rows();
  if (M.cols() != n) throw ContractError("snf_exponents: square matrix required");
  // d_k = min valuation over k x k minors; e_k = d_k - d_{k-1}, then sort
  // descending to match partition-style cocharacters.
  std::vector<long> d(static_cast<size_t>(n) + 1, 0);
  for (Eigen::Index k = 1; k <= n; ++k) {
    // Enumerate k-subsets of rows and columns.
    std::vector<Eigen::Index> rows(static_cast<size_t>(k));
    std::vector<Eigen::Index> cols(static_cast<size_t>(k));
    bool found = false;
    long best = 0;
    auto iterate_subsets = [&](auto&& self, std::vector<Eigen::Index>& sel,
                               Eigen::Index start, Eigen::Index depth,
                               auto&& on_complete) -> void {
      if (depth == k) {
        on_complete();
        return;
      }
      for (Eigen::Index i = start; i < n; ++i) {
        sel[static_cast<size_t>(depth)] = i;
        self(self, sel, i + 1, depth + 1, on_complete);
      }
    };
    iterate_subsets(iterate_subsets, rows, 0, 0, [&] {
      iterate_subsets(iterate_subsets, cols, 0, 0, [&] {
        RMat sub(k, k);
        for (Eigen::Index a = 0; a < k; ++a)
          for (Eigen::Index b = 0; b < k; ++b)
            sub(a, b) = M(rows[static_cast<size_t>(a)], cols[static_cast<size_t>(b)]);
        Rational dv = det_exact(sub);
        if (dv != 0) {
          long v = p_valuation(dv, p);
          if (!found || v < best) {
            found = true;
            best = v;
          }
        }
      });
    });
    if (!found) throw ContractError("snf_exponents: singular matrix");
    d[static_cast<size_t>(k)] = best;
  }
  std::vector<long> e;
  for (Eigen::Index k = 1; k <= n; ++k)
    e.push_back(d[static_cast<size_t>(k)] - d[static_cast<size_t>(k - 1)]);
  std::sort(e.begin(), e.end(), std::greater<long>());
  return e;
}

std::vector<RMat> hnf_sphere(int n, const RVec& mu, long p) {
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (!is_integer(mu[i]) || mu[i] < 0 || (i + 1 < mu.size() && mu[i] < mu[i + 1]))
      throw ContractError("hnf_sphere: mu must be a partition");
  long total = 0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) total += to_long(mu[i]);
  std::vector<long> target;
  for (Eigen::Index i = 0; i < mu.size(); ++i) target.push_back(to_long(mu[i]));

  std::vector<RMat> out;
  // Diagonal exponent compositions a_0..a_{n-1} summing to |mu|.
  std::vector<long> a(static_cast<size_t>(n), 0);
  auto rec_diag = [&](auto&& self, int i, long rem) -> void {
    if (i == n) {
      if (rem != 0) return;
      // Off-diagonal digits: entry (i,j), j > i, in [0, p^{a_i}).
      std::vector<long> caps;
      for (int r = 0; r < n; ++r) {
        long c = 1;
        for (long t = 0; t < a[static_cast<size_t>(r)]; ++t) c *= p;
        caps.push_back(c);
      }
      std::vector<std::pair<int, int>> slots;
      for (int r = 0; r < n; ++r)
        for (int cidx = r + 1; cidx < n; ++cidx) slots.push_back({r, cidx});
      std::vector<long> digits(slots.size(), 0);
      auto rec_fill = [&](auto&& fill, size_t s) -> void {
        if (s == slots.size()) {
          RMat H = RMat::Zero(n, n);
          for (int r = 0; r < n; ++r) H(r, r) = caps[static_cast<size_t>(r)];
          for (size_t t = 0; t < slots.size(); ++t)
            H(slots[t].first, slots[t].second) = digits[t];
          if (snf_exponents(H, p) == target) out.push_back(std::move(H));
          return;
        }
        long cap = caps[static_cast<size_t>(slots[s].first)];
        for (long v = 0; v < cap; ++v) {
          digits[s] = v;
          fill(fill, s + 1);
        }
      };
      rec_fill(rec_fill, 0);
      return;
    }
    // p^{mu_1} annihilates Z^n / H Z^n, so every diagonal exponent is at
    // most mu_1; larger compositions can never realize the Smith form.
    long hi = std::min(rem, target.empty() ? 0 : target[0]);
    for (long v = 0; v <= hi; ++v) {
      a[static_cast<size_t>(i)] = v;
      self(self, i + 1, rem - v);
    }
  };
  rec_diag(rec_diag, 0, total);
  return out;
}

namespace {

RMat inverse2(const RMat& M) {
  Rational d = det_exact(M);
  if (d == 0) throw ContractError("inverse2: singular");
  RMat inv(2, 2);
  inv(0, 0) = M(1, 1) / d;
  inv(0, 1) = -M(0, 1) / d;
  inv(1, 0) = -M(1, 0) / d;
  inv(1, 1) = M(0, 0) / d;
  return inv;
}

bool in_glz_p(const RMat& M, long p) {
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      if (M(i, j) != 0 && p_valuation(M(i, j), p) < 0) return false;
  Rational d = det_exact(M);
  return d != 0 && p_valuation(d, p) == 0;
}

// Same lattice up to multiplication by a power of p.
bool same_lattice_mod_center(const RMat& A, const RMat& B, long p) {
  RMat Q = inverse2(B) * A;
  Rational d = det_exact(Q);
  if (d == 0) return false;
  long dv = p_valuation(d, p);
  if (dv % 2) return false;
  long c = dv / 2;
  Rational scale = 1;
  for (long i = 0; i < (c < 0 ? -c : c); ++i) scale *= p;
  if (c < 0) scale = Rational(1) / scale;
  RMat S = Q / scale;
  return in_glz_p(S, p);
}

RVec dominant_sort2(const RVec& mu) {
  RVec v = mu;
  if (v[0] < v[1]) std::swap(v[0], v[1]);
  return v;
}

// Shift a 2-vector to a nonnegative partition, returning the shift applied.
std::pair<RVec, long> normalize2(const RVec& mu) {
  RVec v = dominant_sort2(mu);
  long shift = 0;
  if (v[1] < 0) {
    shift = -to_long(v[1]);
    v[0] += shift;
    v[1] += shift;
  }
  return {v, shift};
}

}  // namespace

Int intersection_count(const IntersectionConfig& config, const RVec& mu) {
  long p = config.p;
  if (p > 5) throw ContractError("intersection_count: p <= 5");
  if (det_exact(config.y1) * det_exact(config.y1) != 1 ||
      det_exact(config.y2) * det_exact(config.y2) != 1)
    throw ContractError("intersection_count: twists must be unimodular");
  using Kind = IntersectionConfig::Kind;
  if (config.kind == Kind::FullGL2) {
    auto [part, shift] = normalize2(mu);
    return Int(hnf_sphere(2, part, p).size());
  }
  if (config.kind == Kind::TorusGL2) {
    auto [part, shift] = normalize2(mu);
    long total = to_long(part[0]) + to_long(part[1]);
    RMat yinv = inverse2(config.y1);
    Int count = 0;
    for (const RMat& H : hnf_sphere(2, part, p)) {
      RMat M = yinv * H;
      // Lattice M Z_p^2 is split iff it contains p^{b_i} e_i with
      // b_0 + b_1 equal to the index exponent.
      long bsum = 0;
      bool ok = true;
      RMat Minv = inverse2(M);
      for (int i = 0; i < 2 && ok; ++i) {
        bool found = false;
        for (long b = 0; b <= total && !found; ++b) {
          RVec e = RVec::Zero(2);
          Rational pw = 1;
          for (long t = 0; t < b; ++t) pw *= p;
          e[i] = pw;
          RVec z = Minv * e;
          bool integral = true;
          for (int j = 0; j < 2; ++j)
            if (z[j] != 0 && p_valuation(z[j], p) < 0) integral = false;
          if (integral) {
            bsum += b;
            found = true;
          }
        }
        if (!found) ok = false;
      }
      if (ok && bsum == total) ++count;
    }
    return count;
  }
  // Diagonal kinds: mu = (mu1, mu2) concatenated.
  if (mu.size() != 4) throw ContractError("intersection_count: diagonal kinds need a 4-vector");
  RVec mu1(2), mu2(2);
  mu1 << mu[0], mu[1];
  mu2 << mu[2], mu[3];
  auto [p1, s1] = normalize2(mu1);
  auto [p2, s2] = normalize2(mu2);
  RMat y1inv = inverse2(config.y1);
  RMat y2inv = inverse2(config.y2);
  Int count = 0;
  for (const RMat& A1 : hnf_sphere(2, p1, p)) {
    for (const RMat& A2 : hnf_sphere(2, p2, p)) {
      RMat M1 = y1inv * A1;
      RMat M2 = y2inv * A2;
      bool match;
      if (config.kind == Kind::DiagGL2) {
        // GL2 case keeps track of the central shifts removed above: the
        // lattices must agree on the nose, so reinstate them.
        Rational sc1 = 1, sc2 = 1;
        for (long t = 0; t < s1; ++t) sc1 *= p;
        for (long t = 0; t < s2; ++t) sc2 *= p;
        match = in_glz_p(inverse2(M2 / sc2) * (M1 / sc1), p) &&
                in_glz_p(inverse2(M1 / sc1) * (M2 / sc2), p);
      } else {
        match = same_lattice_mod_center(M1, M2, p);
      }
      if (match) ++count;
    }
  }
  return count;
}

BuildingCountReport buildingcount_check(const IntersectionConfig& config, const RVec& mu) {
  BuildingCountReport rep;
  rep.count = intersection_count(config, mu);
  using Kind = IntersectionConfig::Kind;
  long p = config.p;
  auto pow_p = [&](const Rational& e) {
    long k = to_long(e);
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= p;
    return r;
  };
  switch (config.kind) {
    case Kind::TorusGL2:
      rep.bound = 1;  // Delta_H empty
      break;
    case Kind::FullGL2: {
      RootDatum gl2 = build_root_datum(Family::A, 1);
      rep.bound = pow_p(star_norm2(gl2, dominant_sort2(mu)));
      break;
    }
    case Kind::DiagGL2:
    case Kind::DiagPGL2: {
      RVec mu1(2), mu2(2);
      mu1 << mu[0], mu[1];
      mu2 << mu[2], mu[3];
      RVec d1 = dominant_sort2(mu1);
      RVec d2 = dominant_sort2(mu2);
      bool in_H;
      if (config.kind == Kind::DiagPGL2) {
        // Diagonal H-lattice mod center: shapes agree up to a common shift.
        in_H = (d1[0] - d1[1]) == (d2[0] - d2[1]);
      } else {
        in_H = d1 == d2;
      }
      if (!in_H) {
        rep.bound = 0;
        if (rep.count != 0)
          throw InternalError("buildingcount_check: nonzero count off the H-lattice");
      } else {
        RootDatum gl2 = build_root_datum(Family::A, 1);
        rep.bound = pow_p(star_norm2(gl2, d1));
      }
      break;
    }
  }
  rep.ratio = rep.bound == 0
                  ? 0.0
                  : static_cast<double>(rep.count) / rep.bound.convert_to<double>();
  return rep;
}

}  // namespace liecomb
