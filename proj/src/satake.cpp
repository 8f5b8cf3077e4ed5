#include "liecomb/satake.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "liecomb/buildings.hpp"
#include "liecomb/charring.hpp"

namespace liecomb {

namespace {

long psum(const Partition& p) {
  long s = 0;
  for (long x : p) s += x;
  return s;
}

bool dominance_partition_leq(const Partition& a, const Partition& b) {
  // a <= b: partial sums of a never exceed those of b, totals equal.
  long sa = 0, sb = 0;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return sa == sb;
}

// Charge of a reading word with partition content, by repeated extraction
// of standard subwords (rightmost 1, then cyclically leftward scans).
long charge_of_word(std::vector<long> word, long max_letter) {
  long total = 0;
  while (!word.empty()) {
    std::vector<size_t> chosen;
    long pos = -1;
    for (size_t i = word.size(); i-- > 0;) {
      if (word[i] == 1) {
        pos = static_cast<long>(i);
        break;
      }
    }
    if (pos < 0) throw InternalError("charge: missing letter 1");
    chosen.push_back(static_cast<size_t>(pos));
    long index = 0;
    long charge = 0;
    for (long letter = 2; letter <= max_letter; ++letter) {
      long found = -1;
      // Scan leftward from the previous pick, wrapping once.
      long n = static_cast<long>(word.size());
      for (long step = 1; step <= n; ++step) {
        long i = pos - step;
        if (i < 0) i += n;
        if (word[static_cast<size_t>(i)] == letter) {
          found = i;
          break;
        }
      }
      if (found < 0) break;  // letter exhausted: subword ends
      if (found > pos) ++index;
      charge += index;
      chosen.push_back(static_cast<size_t>(found));
      pos = found;
    }
    total += charge;
    std::sort(chosen.begin(), chosen.end(), std::greater<size_t>());
    for (size_t i : chosen) word.erase(word.begin() + static_cast<long>(i));
    // Letters beyond the extracted subword's top must not remain unmatched
    // below it; with partition content the next pass restarts at 1.
  }
  return total;
}

// Semistandard tableaux of the given shape and content, reported as charge
// multiset via a callback.
void enumerate_ssyt(const Partition& shape, const Partition& content,
                    const std::function<void(const std::vector<std::vector<long>>&)>& emit) {
  std::vector<std::vector<long>> rows;
  for (long len : shape)
    if (len > 0) rows.push_back(std::vector<long>(static_cast<size_t>(len), 0));
  std::vector<long> used(content.size() + 1, 0);
  std::function<void(size_t, size_t)> rec = [&](size_t r, size_t c) {
    if (r == rows.size()) {
      emit(rows);
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == rows[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    long lo = c > 0 ? rows[r][c - 1] : 1;
    long above = (r > 0 && c < rows[r - 1].size()) ? rows[r - 1][c] : 0;
    lo = std::max(lo, above + 1);
    for (long v = lo; v <= static_cast<long>(content.size()); ++v) {
      if (used[static_cast<size_t>(v)] >= content[static_cast<size_t>(v - 1)]) continue;
      rows[r][c] = v;
      ++used[static_cast<size_t>(v)];
      rec(nr, nc);
      --used[static_cast<size_t>(v)];
    }
  };
  if (rows.empty()) {
    emit(rows);
    return;
  }
  rec(0, 0);
}

}  // namespace

std::vector<Partition> partitions_of(long n, int parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(long, long)> rec = [&](long rem, long maxpart) {
    if (rem == 0) {
      Partition p = cur;
      while (static_cast<int>(p.size()) < parts) p.push_back(0);
      out.push_back(std::move(p));
      return;
    }
    if (static_cast<int>(cur.size()) == parts) return;
    for (long v = std::min(rem, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

TPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
  if (psum(lam) != psum(mu)) throw ContractError("kostka_foulkes: |lam| != |mu|");
  TPoly out;
  if (!dominance_partition_leq(mu, lam)) return out;
  long max_letter = static_cast<long>(mu.size());
  enumerate_ssyt(lam, mu, [&](const std::vector<std::vector<long>>& rows) {
    std::vector<long> word;
    for (size_t r = rows.size(); r-- > 0;)
      for (long v : rows[r]) word.push_back(v);
    long ch = charge_of_word(word, max_letter);
    Int& slot = out[static_cast<int>(ch)];
    slot += 1;
  });
  return out;
}

namespace {

struct OmegaKey {
  int n;
  std::vector<long> mu;
  bool operator<(const OmegaKey& o) const {
    if (n != o.n) return n < o.n;
    return mu < o.mu;
  }
};

std::mutex omega_mutex;
std::map<OmegaKey, VirtualCharacter> omega_cache;

}  // namespace

VirtualCharacter satake_omega(int n, const RVec& mu) {
  if (n < 1 || n > 4) throw ResourceError("satake_omega: n <= 4");
  if (mu.size() != n) throw ContractError("satake_omega: dimension mismatch");
  std::vector<long> mu_l;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!is_integer(mu[i])) throw ContractError("satake_omega: integral mu required");
    long v = to_long(mu[i]);
    if (v > 8 || v < -8) throw ResourceError("satake_omega: entry cap exceeded");
    mu_l.push_back(v);
    if (i && mu_l[static_cast<size_t>(i - 1)] < v)
      throw ContractError("satake_omega: dominant mu required");
  }
  OmegaKey key{n, mu_l};
  {
    std::lock_guard<std::mutex> lock(omega_mutex);
    auto it = omega_cache.find(key);
    if (it != omega_cache.end()) return it->second;
  }
  long shift = mu_l.back();
  Partition part;
  for (long v : mu_l) part.push_back(v - shift);
  long N = psum(part);
  std::vector<Partition> plist = partitions_of(N, n);
  std::sort(plist.begin(), plist.end(), std::greater<Partition>());  // lex descending
  size_t m = plist.size();
  size_t mu_idx = static_cast<size_t>(
      std::find(plist.begin(), plist.end(), part) - plist.begin());
  if (mu_idx == m) throw InternalError("satake_omega: shifted mu not indexed");
  // Row mu of the inverse unitriangular Kostka-Foulkes matrix: solve
  // x^T K = e_mu^T by forward substitution in the descending order.
  std::vector<std::vector<TPoly>> K(m, std::vector<TPoly>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) K[i][j] = kostka_foulkes(plist[i], plist[j]);
  std::vector<TPoly> x(m);
  for (size_t j = 0; j < m; ++j) {
    TPoly rhs;
    if (j == mu_idx) rhs[0] = 1;
    for (size_t i = 0; i < j; ++i)
      if (!x[i].empty() && !K[i][j].empty()) tpoly_sub_inplace(rhs, tpoly_mul(x[i], K[i][j]));
    x[j] = std::move(rhs);
  }
  VirtualCharacter vc;
  for (size_t i = 0; i < m; ++i) {
    if (x[i].empty()) continue;
    LaurentHalfQ c;
    for (const auto& [e, coef] : x[i]) c.add_term(-2 * e, Rational(coef));
    RVec lam(n);
    for (int j = 0; j < n; ++j) lam[j] = plist[i][static_cast<size_t>(j)] + shift;
    vc.terms[lam] = std::move(c);
  }
  std::lock_guard<std::mutex> lock(omega_mutex);
  omega_cache[key] = vc;
  return vc;
}

BruteforceSatake satake_bruteforce(int n, const RVec& mu, long p) {
  if (n < 1 || n > 3) throw ResourceError("satake_bruteforce: n <= 3");
  if (p > 7) throw ResourceError("satake_bruteforce: p <= 7");
  if (mu.size() != n) throw ContractError("satake_bruteforce: dimension mismatch");
  std::vector<long> mu_l;
  for (Eigen::Index i = 0; i < n; ++i) {
    mu_l.push_back(to_long(mu[i]));
    if (i && mu_l[static_cast<size_t>(i - 1)] < mu_l.back())
      throw ContractError("satake_bruteforce: dominant mu required");
  }
  long shift = mu_l.back();
  Partition part;
  for (long v : mu_l) part.push_back(v - shift);
  long B = part.front();
  if (B > 3) throw ResourceError("satake_bruteforce: spread <= 3");
  long N = psum(part);
  RootDatum gl = n >= 2 ? build_root_datum(Family::A, n - 1) : make_torus_datum(1);
  RVec rho(n);
  for (int i = 0; i < n; ++i) rho[i] = Rational(n - 1 - 2 * i, 2);

  long pB = 1;
  for (long i = 0; i < B; ++i) pB *= p;
  int m = n * (n - 1) / 2;
  long grid = 1;
  for (int i = 0; i < m; ++i) grid *= pB;
  if (grid > 2000000) throw ResourceError("satake_bruteforce: grid cap exceeded");

  std::vector<long> target = part;
  // Monomial coefficients on dominant lambda <= part.
  std::map<RVec, Rational, RVecLess> mono;
  for (const Partition& lam : partitions_of(N, n)) {
    if (!dominance_partition_leq(lam, part)) continue;
    long count = 0;
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) slots.push_back({r, c});
    std::vector<long> digits(slots.size(), 0);
    std::function<void(size_t)> rec = [&](size_t s) {
      if (s == slots.size()) {
        RMat M = RMat::Zero(n, n);
        for (int i = 0; i < n; ++i) {
          Rational pw = 1;
          for (long t = 0; t < lam[static_cast<size_t>(i)]; ++t) pw *= p;
          M(i, i) = pw;
        }
        for (size_t t = 0; t < slots.size(); ++t) {
          // n entry a/p^B times the column's diagonal p-power.
          Rational entry = Rational(digits[t], pB) * M(slots[t].second, slots[t].second);
          M(slots[t].first, slots[t].second) = entry;
        }
        if (snf_exponents(M, p) == target) ++count;
        return;
      }
      for (long v = 0; v < pB; ++v) {
        digits[s] = v;
        rec(s + 1);
      }
    };
    rec(0);
    if (count == 0) continue;
    RVec lamv(n);
    for (int i = 0; i < n; ++i) lamv[i] = lam[static_cast<size_t>(i)];
    Rational e = dot(rho, lamv) - dot(rho, rvec(std::vector<long>(part.begin(), part.end())));
    long el = to_long(e);
    Rational scale = 1;
    for (long i = 0; i < (el < 0 ? -el : el); ++i) scale *= p;
    if (el < 0) scale = Rational(1) / scale;
    mono[lamv] = Rational(count) * scale;
  }

  // Greedy monomial-to-character conversion down the dominance order.
  BruteforceSatake out;
  while (true) {
    auto it = std::find_if(mono.rbegin(), mono.rend(),
                           [](const auto& kv) { return kv.second != 0; });
    if (it == mono.rend()) break;
    RVec lam = it->first;
    Rational c = it->second;
    RVec lam_shifted = lam;
    for (int i = 0; i < n; ++i) lam_shifted[i] += shift;
    out.terms[lam_shifted] = c;
    CharacterTable table = weight_multiplicities(gl, LatticeVector::weight(lam));
    for (const auto& [w, mult] : table.multiplicities) {
      if (!gl.is_dominant(LatticeVector::weight(w))) continue;
      Rational& slot = mono[w];
      slot -= c * mult;
    }
    if (mono[lam] != 0)
      throw InternalError("satake_bruteforce: character subtraction failed");
  }
  out.sphere_size = static_cast<long>(hnf_sphere(n, rvec(std::vector<long>(
                                                     part.begin(), part.end())),
                                                 p)
                                          .size());
  return out;
}

std::map<RVec, Rational, RVecLess> convolution_omega(int n, const RVec& mu,
                                                     const RVec& nu, long p) {
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (mu[i] < 0 || nu[i] < 0)
      throw ContractError("convolution_omega: nonnegative partitions required");
  std::vector<RMat> sphere_mu = hnf_sphere(n, mu, p);
  RVec rho(n);
  for (int i = 0; i < n; ++i) rho[i] = Rational(n - 1 - 2 * i, 2);
  long total = 0;
  for (Eigen::Index i = 0; i < n; ++i) total += to_long(mu[i]) + to_long(nu[i]);
  std::vector<long> nu_target;
  for (Eigen::Index i = 0; i < n; ++i) nu_target.push_back(to_long(nu[i]));

  std::map<RVec, Rational, RVecLess> out;
  for (const Partition& sig : partitions_of(total, n)) {
    RMat D = RMat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      Rational pw = 1;
      for (long t = 0; t < sig[static_cast<size_t>(i)]; ++t) pw *= p;
      D(i, i) = pw;
    }
    long count = 0;
    for (const RMat& A : sphere_mu) {
      // A^{-1} D via exact solve.
      RMat Ainv = RMat::Zero(n, n);
      {
        // Gaussian elimination on the augmented system.
        RMat aug(n, 2 * n);
        aug.block(0, 0, n, n) = A;
        aug.block(0, n, n, n) = RMat::Identity(n, n);
        for (int col = 0; col < n; ++col) {
          int piv = -1;
          for (int r = col; r < n; ++r)
            if (aug(r, col) != 0) {
              piv = r;
              break;
            }
          aug.row(col).swap(aug.row(piv));
          Rational inv = Rational(1) / aug(col, col);
          aug.row(col) *= inv;
          for (int r = 0; r < n; ++r)
            if (r != col && aug(r, col) != 0) {
              Rational f = aug(r, col);
              aug.row(r) -= f * aug.row(col);
            }
        }
        Ainv = aug.block(0, n, n, n);
      }
      RMat M = Ainv * D;
      bool integral = true;
      for (int i = 0; i < n && integral; ++i)
        for (int j = 0; j < n; ++j)
          if (M(i, j) != 0 && p_valuation(M(i, j), p) < 0) {
            integral = false;
            break;
          }
      if (!integral) continue;
      if (snf_exponents(M, p) == nu_target) ++count;
    }
    if (count == 0) continue;
    RVec sigv(n);
    for (int i = 0; i < n; ++i) sigv[i] = sig[static_cast<size_t>(i)];
    Rational e = dot(rho, sigv) - dot(rho, mu) - dot(rho, nu);
    long el = to_long(e);
    Rational scale = 1;
    for (long i = 0; i < (el < 0 ? -el : el); ++i) scale *= p;
    if (el < 0) scale = Rational(1) / scale;
    out[sigv] = Rational(count) * scale;
  }
  return out;
}

namespace {

std::mutex table_mutex;
std::map<std::pair<int, std::vector<long>>, CharacterTable> table_cache;

const CharacterTable& cached_table(int n, const RVec& lam) {
  std::vector<long> key_vec;
  for (Eigen::Index i = 0; i < lam.size(); ++i) key_vec.push_back(to_long(lam[i]));
  auto key = std::make_pair(n, key_vec);
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = table_cache.find(key);
  if (it != table_cache.end()) return it->second;
  RootDatum gl = n >= 2 ? build_root_datum(Family::A, n - 1) : make_torus_datum(1);
  auto [res, ok] = table_cache.emplace(key, weight_multiplicities(gl, LatticeVector::weight(lam)));
  return res->second;
}

}  // namespace

std::complex<double> satake_eval(int n, const VirtualCharacter& vc, const Rational& q,
                                 const std::vector<std::complex<double>>& x) {
  std::complex<double> total = 0.0;
  for (const auto& [lam, c] : vc.terms) {
    Rational cq = c.eval(q);
    const CharacterTable& table = cached_table(n, lam);
    std::complex<double> chi = 0.0;
    for (const auto& [w, mult] : table.multiplicities) {
      std::complex<double> term = static_cast<double>(mult);
      for (Eigen::Index i = 0; i < w.size(); ++i)
        term *= power(x[static_cast<size_t>(i)], to_long(w[i]));
      chi += term;
    }
    total += to_double(cq) * chi;
  }
  return total;
}

std::pair<RVec, std::complex<double>> amplifier_select(
    int n, const std::vector<std::complex<double>>& x, const Rational& q, int R) {
  if (R < 1) throw ContractError("amplifier_select: R >= 1");
  RootDatum gl = build_root_datum(Family::A, n - 1);
  std::vector<RVec> cands = search_candidates(gl, R);
  bool found = false;
  RVec best_mu;
  std::complex<double> best_val = 0.0;
  for (const RVec& mu : cands) {
    VirtualCharacter vc = satake_omega(n, mu);
    std::complex<double> v = satake_eval(n, vc, q, x);
    if (!found || std::abs(v) > std::abs(best_val)) {
      found = true;
      best_mu = mu;
      best_val = v;
    }
  }
  if (!found || !(std::abs(best_val) > 0))
    throw ExhaustionError("amplifier_select: all transforms vanish at x");
  return {best_mu, best_val};
}

std::vector<int> levi_threshold_partition(int n,
                                          const std::vector<std::complex<double>>& x,
                                          const ThresholdTable& thresholds) {
  RootDatum gl = build_root_datum(Family::A, n - 1);
  size_t ns = gl.num_simple();
  if (thresholds.C1.size() < ns + 1 || thresholds.C2.size() < ns + 1)
    throw ContractError("levi_threshold_partition: tables need entries for sizes 0..n-1");
  for (size_t s = 0; s + 1 <= ns; ++s) {
    if (thresholds.C1[s + 1] < thresholds.C1[s] || thresholds.C1[s + 1] < thresholds.C2[s])
      throw ContractError("levi_threshold_partition: non-monotone threshold table");
  }
  struct Entry {
    double value;
    int index;
  };
  std::vector<Entry> vals;
  for (size_t k = 0; k < ns; ++k) {
    const RVec& alpha = gl.simple_root(k);
    std::complex<double> a = 1.0;
    for (Eigen::Index i = 0; i < alpha.size(); ++i)
      a *= power(x[static_cast<size_t>(i)], to_long(alpha[i]));
    vals.push_back({std::abs(a), static_cast<int>(k)});
  }
  std::sort(vals.begin(), vals.end(),
            [](const Entry& a, const Entry& b) { return a.value < b.value; });
  size_t best = 0;
  for (size_t s = 1; s <= ns; ++s)
    if (vals[s - 1].value <= thresholds.C1[s]) best = s;
  std::vector<int> theta;
  for (size_t i = 0; i < best; ++i) theta.push_back(vals[i].index);
  std::sort(theta.begin(), theta.end());
  return theta;
}

}  // namespace liecomb
