#include "liecomb/root_datum.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace liecomb {

namespace {

RVec unit(int dim, int i, Rational c = 1) {
  RVec v = RVec::Zero(dim);
  v[i] = c;
  return v;
}

void push_pair(RootDatum& d, RVec root, RVec coroot) {
  d.roots.push_back(std::move(root));
  d.coroots.push_back(std::move(coroot));
}

// Positives are listed first, negatives mirrored after them, so index i and
// i + |positives| are a +-pair.
void finalize(RootDatum& d, const std::vector<RVec>& simple_roots) {
  size_t npos = d.roots.size();
  for (size_t i = 0; i < npos; ++i) {
    d.roots.push_back(-d.roots[i]);
    d.coroots.push_back(-d.coroots[i]);
  }
  d.two_rho = RVec::Zero(d.ambient_dim);
  for (size_t i = 0; i < npos; ++i) {
    d.positive_indices.push_back(static_cast<int>(i));
    d.two_rho += d.roots[i];
  }
  for (const RVec& s : simple_roots) {
    int found = -1;
    for (size_t i = 0; i < npos; ++i) {
      if (d.roots[i] == s) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0) throw InternalError("finalize: simple root not in positive list");
    d.simple_indices.push_back(found);
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::Torus: return "Torus";
  }
  return "?";
}

bool RootDatum::is_dominant(const LatticeVector& v) const {
  for (size_t k = 0; k < num_simple(); ++k) {
    const RVec& test = v.side == Side::Coweight ? simple_root(k) : simple_coroot(k);
    if (dot(test, v.coords) < 0) return false;
  }
  return true;
}

RootDatum make_torus_datum(int dim) {
  if (dim < 0) throw CapabilityError("torus datum: negative dimension");
  RootDatum d;
  d.family = Family::Torus;
  d.rank = dim;
  d.ambient_dim = dim;
  d.two_rho = RVec::Zero(dim);
  return d;
}

RootDatum build_root_datum(Family family, int rank) {
  RootDatum d;
  d.family = family;
  d.rank = rank;
  std::vector<RVec> simples;
  switch (family) {
    case Family::Torus:
      return make_torus_datum(rank);
    case Family::A: {
      if (rank < 1 || rank > 8) throw CapabilityError("type A rank out of range");
      int n = rank + 1;
      d.ambient_dim = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RVec r = unit(n, i) - unit(n, j);
          push_pair(d, r, r);
        }
      for (int i = 0; i + 1 < n; ++i) simples.push_back(unit(n, i) - unit(n, i + 1));
      break;
    }
    case Family::B: {
      if (rank < 1 || rank > 5) throw CapabilityError("type B rank out of range");
      int n = rank;
      d.ambient_dim = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RVec r = unit(n, i) - unit(n, j);
          push_pair(d, r, r);
          r = unit(n, i) + unit(n, j);
          push_pair(d, r, r);
        }
      for (int i = 0; i < n; ++i) push_pair(d, unit(n, i), unit(n, i, 2));
      for (int i = 0; i + 1 < n; ++i) simples.push_back(unit(n, i) - unit(n, i + 1));
      simples.push_back(unit(n, n - 1));
      break;
    }
    case Family::C: {
      if (rank < 1 || rank > 5) throw CapabilityError("type C rank out of range");
      int n = rank;
      d.ambient_dim = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RVec r = unit(n, i) - unit(n, j);
          push_pair(d, r, r);
          r = unit(n, i) + unit(n, j);
          push_pair(d, r, r);
        }
      for (int i = 0; i < n; ++i) push_pair(d, unit(n, i, 2), unit(n, i));
      for (int i = 0; i + 1 < n; ++i) simples.push_back(unit(n, i) - unit(n, i + 1));
      simples.push_back(unit(n, n - 1, 2));
      break;
    }
    case Family::D: {
      if (rank < 2 || rank > 6) throw CapabilityError("type D rank out of range");
      int n = rank;
      d.ambient_dim = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RVec r = unit(n, i) - unit(n, j);
          push_pair(d, r, r);
          r = unit(n, i) + unit(n, j);
          push_pair(d, r, r);
        }
      for (int i = 0; i + 1 < n; ++i) simples.push_back(unit(n, i) - unit(n, i + 1));
      simples.push_back(unit(n, n - 2) + unit(n, n - 1));
      break;
    }
    case Family::G2: {
      if (rank != 2) throw CapabilityError("G2 realization has rank 2");
      d.ambient_dim = 2;
      // Positive roots of the SU(2)xSU(2)-adapted realization with their
      // coroots 2a/(a,a) under the invariant form diag(3,1).
      push_pair(d, rvec({2, 0}), rvec({1, 0}));
      push_pair(d, rvec({0, 2}), rvec({0, 1}));
      push_pair(d, rvec({1, 1}), rvec({Rational(3, 2), Rational(1, 2)}));
      push_pair(d, rvec({1, -1}), rvec({Rational(3, 2), Rational(-1, 2)}));
      push_pair(d, rvec({1, 3}), rvec({Rational(1, 2), Rational(1, 2)}));
      push_pair(d, rvec({1, -3}), rvec({Rational(1, 2), Rational(-1, 2)}));
      simples.push_back(rvec({0, 2}));
      simples.push_back(rvec({1, -3}));
      break;
    }
  }
  finalize(d, simples);
  return d;
}

RootDatum direct_sum(const RootDatum& a, const RootDatum& b) {
  RootDatum d;
  d.family = Family::Torus;  // composite tag; family is informational only here
  d.rank = a.rank + b.rank;
  d.ambient_dim = a.ambient_dim + b.ambient_dim;
  auto pad_left = [&](const RVec& v) {
    RVec w = RVec::Zero(d.ambient_dim);
    w.head(a.ambient_dim) = v;
    return w;
  };
  auto pad_right = [&](const RVec& v) {
    RVec w = RVec::Zero(d.ambient_dim);
    w.tail(b.ambient_dim) = v;
    return w;
  };
  size_t na = a.positive_indices.size();
  size_t nb = b.positive_indices.size();
  for (int i : a.positive_indices) push_pair(d, pad_left(a.roots[i]), pad_left(a.coroots[i]));
  for (int i : b.positive_indices) push_pair(d, pad_right(b.roots[i]), pad_right(b.coroots[i]));
  std::vector<RVec> simples;
  for (size_t k = 0; k < a.num_simple(); ++k) simples.push_back(pad_left(a.simple_root(k)));
  for (size_t k = 0; k < b.num_simple(); ++k) simples.push_back(pad_right(b.simple_root(k)));
  (void)na;
  (void)nb;
  finalize(d, simples);
  return d;
}

RVec apply_reflection(const RootDatum& datum, int root_index, const RVec& v, Side side) {
  const RVec& alpha = datum.roots[root_index];
  const RVec& alphav = datum.coroots[root_index];
  if (side == Side::Weight) return v - dot(v, alphav) * alpha;
  return v - dot(alpha, v) * alphav;
}

RVec apply_simple(const RootDatum& datum, size_t k, const RVec& v, Side side) {
  return apply_reflection(datum, datum.simple_indices[k], v, side);
}

RVec apply_word(const RootDatum& datum, const std::vector<int>& word, const RVec& v,
                Side side) {
  RVec out = v;
  for (int k : word) out = apply_simple(datum, static_cast<size_t>(k), out, side);
  return out;
}

std::pair<LatticeVector, std::vector<int>> dominant_rep(const RootDatum& datum,
                                                        const LatticeVector& v) {
  RVec cur = v.coords;
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t k = 0; k < datum.num_simple(); ++k) {
      const RVec& test =
          v.side == Side::Coweight ? datum.simple_root(k) : datum.simple_coroot(k);
      if (dot(test, cur) < 0) {
        cur = apply_simple(datum, k, cur, v.side);
        word.push_back(static_cast<int>(k));
        moved = true;
      }
    }
  }
  return {LatticeVector{cur, v.side}, word};
}

std::vector<RVec> weyl_orbit(const RootDatum& datum, const LatticeVector& v, size_t cap) {
  std::set<std::vector<Rational>> seen;
  auto key = [](const RVec& u) {
    return std::vector<Rational>(u.data(), u.data() + u.size());
  };
  std::queue<RVec> frontier;
  frontier.push(v.coords);
  seen.insert(key(v.coords));
  while (!frontier.empty()) {
    RVec cur = frontier.front();
    frontier.pop();
    for (size_t k = 0; k < datum.num_simple(); ++k) {
      RVec next = apply_simple(datum, k, cur, v.side);
      if (seen.insert(key(next)).second) {
        if (seen.size() > cap) throw ResourceError("weyl_orbit: cap exceeded");
        frontier.push(next);
      }
    }
  }
  std::vector<RVec> out;
  out.reserve(seen.size());
  for (const auto& k : seen) {
    RVec u(static_cast<Eigen::Index>(k.size()));
    for (size_t i = 0; i < k.size(); ++i) u[static_cast<Eigen::Index>(i)] = k[i];
    out.push_back(std::move(u));
  }
  return out;
}

Rational star_norm2(const RootDatum& datum, const LatticeVector& mu) {
  if (mu.side != Side::Coweight)
    throw ContractError("star_norm2: expects a coweight-side vector");
  auto [dom, word] = dominant_rep(datum, mu);
  return dot(datum.two_rho, dom.coords);
}

Rational star_norm2(const RootDatum& datum, const RVec& mu_coweight) {
  return star_norm2(datum, LatticeVector::coweight(mu_coweight));
}

std::optional<std::vector<Rational>> decompose_in_basis(const std::vector<RVec>& basis,
                                                        const RVec& diff) {
  if (basis.empty()) {
    if (diff.isZero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  Eigen::Index dim = diff.size();
  Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  RMat A(dim, m);
  for (Eigen::Index j = 0; j < m; ++j) A.col(j) = basis[static_cast<size_t>(j)];
  RVec b = diff;
  // Fraction-free-ish Gaussian elimination with exact rationals.
  std::vector<Eigen::Index> pivot_col(static_cast<size_t>(dim), -1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m && row < dim; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < dim; ++r) {
      if (A(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    A.row(row).swap(A.row(piv));
    std::swap(b[row], b[piv]);
    Rational inv = Rational(1) / A(row, col);
    A.row(row) *= inv;
    b[row] *= inv;
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r != row && A(r, col) != 0) {
        Rational f = A(r, col);
        A.row(r) -= f * A.row(row);
        b[r] -= f * b[row];
      }
    }
    pivot_col[static_cast<size_t>(row)] = col;
    ++row;
  }
  std::vector<Rational> x(static_cast<size_t>(m), Rational(0));
  for (Eigen::Index r = 0; r < row; ++r)
    x[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = b[r];
  for (Eigen::Index r = row; r < dim; ++r)
    if (b[r] != 0) return std::nullopt;
  // Rank-deficient bases would leave free columns at zero; verify the solve.
  RVec check = RVec::Zero(dim);
  for (Eigen::Index j = 0; j < m; ++j) check += x[static_cast<size_t>(j)] * basis[static_cast<size_t>(j)];
  if (check != diff) return std::nullopt;
  return x;
}

bool dominance_leq(const RootDatum& datum, const LatticeVector& lam,
                   const LatticeVector& mu) {
  if (lam.side != mu.side) throw ContractError("dominance_leq: mixed sides");
  if (!datum.is_dominant(lam) || !datum.is_dominant(mu))
    throw ContractError("dominance_leq: inputs must be dominant");
  std::vector<RVec> basis;
  for (size_t k = 0; k < datum.num_simple(); ++k)
    basis.push_back(lam.side == Side::Coweight ? datum.simple_coroot(k)
                                               : datum.simple_root(k));
  RVec diff = mu.coords - lam.coords;
  auto coeffs = decompose_in_basis(basis, diff);
  if (!coeffs) return false;
  for (const Rational& c : *coeffs)
    if (c < 0 || !is_integer(c)) return false;
  return true;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, size_t cap) {
  int dim = datum.ambient_dim;
  std::vector<RMat> gens;
  for (size_t k = 0; k < datum.num_simple(); ++k) {
    RMat g(dim, dim);
    for (int j = 0; j < dim; ++j) {
      RVec e = RVec::Zero(dim);
      e[j] = 1;
      g.col(j) = apply_simple(datum, k, e, Side::Weight);
    }
    gens.push_back(std::move(g));
  }
  auto key = [dim](const RMat& m) {
    std::vector<Rational> k;
    k.reserve(static_cast<size_t>(dim * dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) k.push_back(m(i, j));
    return k;
  };
  std::map<std::vector<Rational>, size_t> seen;
  std::vector<WeylElement> out;
  WeylElement id{RMat::Identity(dim, dim), 0, {}};
  seen[key(id.weight_action)] = 0;
  out.push_back(std::move(id));
  size_t head = 0;
  while (head < out.size()) {
    // Copy, not reference: out may reallocate inside the loop.
    WeylElement cur = out[head];
    ++head;
    for (size_t k = 0; k < gens.size(); ++k) {
      RMat next = gens[k] * cur.weight_action;
      auto kk = key(next);
      if (seen.find(kk) == seen.end()) {
        if (out.size() >= cap) throw ResourceError("enumerate_weyl: cap exceeded");
        WeylElement e;
        e.weight_action = std::move(next);
        e.length = cur.length + 1;
        // apply_word runs left to right, so the new generator goes last:
        // next v = s_k (cur v).
        e.word = cur.word;
        e.word.push_back(static_cast<int>(k));
        seen[kk] = out.size();
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

unsigned long expected_weyl_order(Family family, int rank) {
  auto fact = [](int n) {
    unsigned long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
  };
  switch (family) {
    case Family::A: return fact(rank + 1);
    case Family::B:
    case Family::C: return fact(rank) << rank;
    case Family::D: return rank >= 2 ? (fact(rank) << (rank - 1)) : 1;
    case Family::G2: return 12;
    case Family::Torus: return 1;
  }
  return 1;
}

std::string to_json(const RootDatum& datum) {
  // Roots are emitted in lexicographic order with coroots matched index-wise;
  // positive/simple index lists refer to the reordered arrays.
  std::vector<int> order(datum.roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(datum.roots[static_cast<size_t>(a)], datum.roots[static_cast<size_t>(b)]);
  });
  std::vector<int> inv(order.size());
  for (size_t i = 0; i < order.size(); ++i) inv[static_cast<size_t>(order[i])] = static_cast<int>(i);
  auto vec_json = [](const RVec& v) {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      if (is_integer(v[i]))
        os << numerator(v[i]);
      else
        os << "\"" << v[i] << "\"";
    }
    os << "]";
    return os.str();
  };
  std::ostringstream os;
  os << "{\"family\":\"" << family_name(datum.family) << "\",\"rank\":" << datum.rank
     << ",\"roots\":[";
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) os << ",";
    os << vec_json(datum.roots[static_cast<size_t>(order[i])]);
  }
  os << "],\"coroots\":[";
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) os << ",";
    os << vec_json(datum.coroots[static_cast<size_t>(order[i])]);
  }
  std::vector<int> pos, simp;
  for (int i : datum.positive_indices) pos.push_back(inv[static_cast<size_t>(i)]);
  for (int i : datum.simple_indices) simp.push_back(inv[static_cast<size_t>(i)]);
  std::sort(pos.begin(), pos.end());
  std::sort(simp.begin(), simp.end());
  os << "],\"positive\":[";
  for (size_t i = 0; i < pos.size(); ++i) {
    if (i) os << ",";
    os << pos[i];
  }
  os << "],\"simple\":[";
  for (size_t i = 0; i < simp.size(); ++i) {
    if (i) os << ",";
    os << simp[i];
  }
  os << "]}";
  return os.str();
}

}  // namespace liecomb
