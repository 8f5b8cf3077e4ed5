#include "liecomb/ksmall.hpp"

#include <algorithm>

#include "liecomb/errors.hpp"
#include "liecomb/lp.hpp"

namespace liecomb {

namespace {

// K-side datum for SU(2)xSU(2) in the G2-adapted coordinates: the two A1
// factors sit at the long roots (2,0) and (0,2).
RootDatum make_su2su2_datum() {
  RootDatum d;
  d.family = Family::Torus;  // custom realization, tag unused
  d.rank = 2;
  d.ambient_dim = 2;
  d.roots = {rvec({2, 0}), rvec({0, 2}), rvec({-2, 0}), rvec({0, -2})};
  d.coroots = {rvec({1, 0}), rvec({0, 1}), rvec({-1, 0}), rvec({0, -1})};
  d.positive_indices = {0, 1};
  d.simple_indices = {0, 1};
  d.two_rho = rvec({2, 2});
  return d;
}

RMat identity_iota(int n) { return RMat::Identity(n, n); }

}  // namespace

std::vector<std::string> embedding_tags() {
  return {"so-sl", "so-sl-odd", "gl-sp", "so-so-even", "so-so-odd", "so-odd-odd",
          "su2-g2"};
}

CocharEmbedding build_embedding(const std::string& tag, int size) {
  CocharEmbedding E;
  E.tag = tag;
  E.size = size;
  if (tag == "so-sl") {
    // SO(k,k) in SL_{2k}: x -> (x_1..x_k, -x_k..-x_1).
    if (size < 1 || size > 4) throw CapabilityError("so-sl: k out of range [1,4]");
    int k = size;
    E.K_datum = k == 1 ? make_torus_datum(1) : build_root_datum(Family::D, k);
    E.G_datum = build_root_datum(Family::A, 2 * k - 1);
    E.iota = RMat::Zero(2 * k, k);
    for (int i = 0; i < k; ++i) {
      E.iota(i, i) = 1;
      E.iota(2 * k - 1 - i, i) = -1;
    }
  } else if (tag == "so-sl-odd") {
    // SO(k,k+1) in SL_{2k+1}: x -> (x_1..x_k, 0, -x_k..-x_1).
    if (size < 1 || size > 3) throw CapabilityError("so-sl-odd: k out of range [1,3]");
    int k = size;
    E.K_datum = build_root_datum(Family::B, k);
    E.G_datum = build_root_datum(Family::A, 2 * k);
    E.iota = RMat::Zero(2 * k + 1, k);
    for (int i = 0; i < k; ++i) {
      E.iota(i, i) = 1;
      E.iota(2 * k - i, i) = -1;
    }
  } else if (tag == "gl-sp") {
    // GL_n in Sp_{2n}: identity on torus coordinates.
    if (size < 2 || size > 4) throw CapabilityError("gl-sp: n out of range [2,4]");
    int n = size;
    E.K_datum = build_root_datum(Family::A, n - 1);
    E.G_datum = build_root_datum(Family::C, n);
    E.iota = identity_iota(n);
  } else if (tag == "so-so-even") {
    if (size < 2 || size > 3) throw CapabilityError("so-so-even: k out of range [2,3]");
    int k = size;
    RootDatum dk = build_root_datum(Family::D, k);
    E.K_datum = direct_sum(dk, dk);
    E.G_datum = build_root_datum(Family::D, 2 * k);
    E.iota = identity_iota(2 * k);
  } else if (tag == "so-so-odd") {
    if (size != 2) throw CapabilityError("so-so-odd: only k = 2 supported");
    int k = size;
    E.K_datum = direct_sum(build_root_datum(Family::D, k), build_root_datum(Family::B, k));
    E.G_datum = build_root_datum(Family::B, 2 * k);
    E.iota = identity_iota(2 * k);
  } else if (tag == "so-odd-odd") {
    // SO(k,k+1) x SO(k+1,k) in SO(2k+1,2k+1): (x,y) -> (x,y,0).
    if (size != 2) throw CapabilityError("so-odd-odd: only k = 2 supported");
    int k = size;
    RootDatum bk = build_root_datum(Family::B, k);
    E.K_datum = direct_sum(bk, bk);
    E.G_datum = build_root_datum(Family::D, 2 * k + 1);
    E.iota = RMat::Zero(2 * k + 1, 2 * k);
    for (int i = 0; i < 2 * k; ++i) E.iota(i, i) = 1;
  } else if (tag == "su2-g2") {
    if (size != 2) throw CapabilityError("su2-g2: rank is fixed at 2");
    E.K_datum = make_su2su2_datum();
    E.G_datum = build_root_datum(Family::G2, 2);
    E.iota = identity_iota(2);
  } else {
    throw CapabilityError("unknown embedding family tag: " + tag);
  }
  return E;
}

Rational defect2(const CocharEmbedding& E, const RVec& mu) {
  RVec image = E.iota * mu;
  return star_norm2(E.G_datum, image) - 2 * star_norm2(E.K_datum, mu);
}

std::pair<Rational, RVec> min_lattice_defect(const CocharEmbedding& E, int box_radius) {
  if (box_radius < 1) throw ContractError("min_lattice_defect: box_radius >= 1");
  int r = E.K_datum.ambient_dim;
  bool found = false;
  Rational best;
  RVec witness;
  // Shells of increasing sup-norm, lex-descending within each shell, with a
  // strictly-less update: the reported witness is the canonical minimizer.
  for (int s = 1; s <= box_radius; ++s) {
    long width = 2 * s + 1;
    long total = 1;
    for (int i = 0; i < r; ++i) total *= width;
    for (long code = 0; code < total; ++code) {
      long rest = code;
      RVec mu(r);
      long sup = 0;
      for (int i = r - 1; i >= 0; --i) {
        long digit = rest % width;
        rest /= width;
        long coord = s - digit;  // descending s, s-1, ..., -s
        mu[i] = coord;
        sup = std::max(sup, coord < 0 ? -coord : coord);
      }
      if (sup != s) continue;
      Rational v = defect2(E, mu);
      if (!found || v < best) {
        found = true;
        best = v;
        witness = mu;
      }
    }
  }
  if (!found) throw InternalError("min_lattice_defect: empty scan");
  return {best, witness};
}

namespace {

// One facet of the sup-norm unit box intersected with the K-dominant cone,
// minimized by cut generation: cuts t >= a.mu are drawn from the W-orbit of
// 2rho_G pulled back through iota, added only when violated at the current
// LP optimum.  The LP value is exact at termination.
struct FaceOutcome {
  bool feasible = false;
  Rational value;
  int lp_solves = 0;
};

FaceOutcome minimize_face(const CocharEmbedding& E, int pinned, int sign) {
  int r = E.K_datum.ambient_dim;
  int nv = r + 1;  // variables mu_0..mu_{r-1}, t
  LinearProgram lp;
  lp.objective = RVec::Zero(nv);
  lp.objective[r] = 1;
  RVec two_rho_K_pull = RVec::Zero(r);
  for (int i = 0; i < r; ++i) two_rho_K_pull[i] = E.K_datum.two_rho[i];
  for (int i = 0; i < r; ++i) lp.objective[i] = -2 * two_rho_K_pull[i];
  for (size_t k = 0; k < E.K_datum.num_simple(); ++k) {
    RVec row = RVec::Zero(nv);
    const RVec& alpha = E.K_datum.simple_root(k);
    for (int i = 0; i < r; ++i) row[i] = alpha[i];
    lp.add_ge(row, 0);
  }
  for (int i = 0; i < r; ++i) {
    RVec row = RVec::Zero(nv);
    row[i] = 1;
    lp.add_ge(row, -1);  // mu_i >= -1
    lp.add_le(row, 1);   // mu_i <= 1
  }
  {
    RVec row = RVec::Zero(nv);
    row[pinned] = 1;
    lp.add_eq(row, sign);
  }
  auto add_cut = [&](const RVec& a) {
    RVec row = RVec::Zero(nv);
    row[r] = 1;
    for (int i = 0; i < r; ++i) row[i] = -a[i];
    lp.add_ge(row, 0);  // t >= a.mu
  };
  add_cut(E.iota.transpose() * E.G_datum.two_rho);

  FaceOutcome out;
  for (;;) {
    LPResult res = solve_lp(lp);
    ++out.lp_solves;
    if (res.status == LPStatus::Infeasible) return out;  // vacuous facet
    if (res.status == LPStatus::Unbounded)
      throw InternalError("verify_ksmall: unbounded face LP");
    RVec mu_star(r);
    for (int i = 0; i < r; ++i) mu_star[i] = res.point[i];
    Rational t_star = res.point[r];
    RVec image = E.iota * mu_star;
    auto [dom, word] = dominant_rep(E.G_datum, LatticeVector::coweight(image));
    Rational exact = dot(E.G_datum.two_rho, dom.coords);
    if (exact > t_star) {
      // Pull the maximizing functional back: <2rho, w(iota mu)> =
      // <(reversed word applied to 2rho), iota mu>.
      RVec v = E.G_datum.two_rho;
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = apply_simple(E.G_datum, static_cast<size_t>(*it), v, Side::Weight);
      if (dot(v, image) != exact)
        throw InternalError("verify_ksmall: functional pullback mismatch");
      add_cut(E.iota.transpose() * v);
      continue;
    }
    out.feasible = true;
    out.value = res.value;
    return out;
  }
}

}  // namespace

KSmallCertificate verify_ksmall(const CocharEmbedding& E, int box_radius) {
  KSmallCertificate cert;
  cert.tag = E.tag;
  cert.size = E.size;
  int r = E.K_datum.ambient_dim;
  bool any = false;
  for (int j = 0; j < r; ++j) {
    for (int sign : {1, -1}) {
      FaceOutcome out = minimize_face(E, j, sign);
      cert.lp_count += out.lp_solves;
      if (!out.feasible) continue;
      if (!any || out.value < cert.kappa2_lower) cert.kappa2_lower = out.value;
      any = true;
    }
  }
  if (!any) throw InternalError("verify_ksmall: every facet LP infeasible");
  auto [lat, witness] = min_lattice_defect(E, box_radius);
  cert.kappa2_lattice = lat;
  cert.witness_mu = witness;
  cert.verdict = cert.kappa2_lower > 0;
  if (cert.kappa2_lattice < cert.kappa2_lower)
    throw InternalError("verify_ksmall: lattice minimum below certified bound");
  return cert;
}

}  // namespace liecomb
