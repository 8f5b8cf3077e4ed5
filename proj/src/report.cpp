#include "liecomb/report.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "liecomb/buildings.hpp"
#include "liecomb/charring.hpp"
#include "liecomb/satake.hpp"

namespace liecomb {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::pair<std::string, int>> kSection7Matrix = {
    {"so-sl-odd", 1}, {"so-sl", 2},      {"so-sl-odd", 2}, {"so-sl", 3},
    {"so-sl-odd", 3}, {"so-sl", 4},      {"gl-sp", 2},     {"gl-sp", 3},
    {"so-so-even", 2}, {"so-so-odd", 2}, {"so-odd-odd", 2}, {"su2-g2", 2},
};

Json cert_json(const ReproduceRow& row) {
  Json j;
  j["label"] = row.label;
  j["family"] = row.cert.tag;
  j["size"] = row.cert.size;
  j["kappa2_lower"] = to_string(row.cert.kappa2_lower);
  j["kappa2_lattice"] = to_string(row.cert.kappa2_lattice);
  std::vector<std::string> w;
  for (Eigen::Index i = 0; i < row.cert.witness_mu.size(); ++i)
    w.push_back(to_string(row.cert.witness_mu[i]));
  j["witness"] = w;
  j["lp_count"] = row.cert.lp_count;
  j["verdict"] = row.cert.verdict ? "positive" : "non-positive";
  return j;
}

}  // namespace

std::string reproduce_label(const std::string& tag, int size) {
  if (tag == "so-sl") return "SL" + std::to_string(2 * size);
  if (tag == "so-sl-odd") return "SL" + std::to_string(2 * size + 1);
  if (tag == "gl-sp") return "Sp" + std::to_string(2 * size);
  if (tag == "so-so-even")
    return "SO(" + std::to_string(2 * size) + "," + std::to_string(2 * size) + ")";
  if (tag == "so-so-odd")
    return "SO(" + std::to_string(2 * size) + "," + std::to_string(2 * size + 1) + ")";
  if (tag == "so-odd-odd")
    return "SO(" + std::to_string(2 * size + 1) + "," + std::to_string(2 * size + 1) + ")";
  if (tag == "su2-g2") return "G2";
  return tag;
}

ReproduceReport reproduce_family(const std::string& tag, int size) {
  ReproduceReport rep;
  CocharEmbedding E = build_embedding(tag, size);
  ReproduceRow row;
  row.label = reproduce_label(tag, size);
  row.cert = verify_ksmall(E);
  rep.rows.push_back(std::move(row));
  rep.all_positive = rep.rows[0].cert.verdict;
  return rep;
}

ReproduceReport reproduce_section7() {
  ReproduceReport rep;
  rep.all_positive = true;
  for (const auto& [tag, size] : kSection7Matrix) {
    CocharEmbedding E = build_embedding(tag, size);
    ReproduceRow row;
    row.label = reproduce_label(tag, size);
    row.cert = verify_ksmall(E);
    rep.all_positive = rep.all_positive && row.cert.verdict;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string to_json(const ReproduceReport& rep) {
  Json j;
  j["rows"] = Json::array();
  for (const ReproduceRow& row : rep.rows) j["rows"].push_back(cert_json(row));
  j["all_positive"] = rep.all_positive;
  return j.dump(2);
}

std::string to_text(const ReproduceReport& rep) {
  std::ostringstream os;
  os << "group      family       kappa2_lower  kappa2_lattice  witness       verdict\n";
  for (const ReproduceRow& row : rep.rows) {
    std::ostringstream wit;
    wit << to_string(row.cert.witness_mu);
    os << row.label;
    for (size_t i = row.label.size(); i < 11; ++i) os << ' ';
    os << row.cert.tag;
    for (size_t i = row.cert.tag.size(); i < 13; ++i) os << ' ';
    std::string kl = to_string(row.cert.kappa2_lower);
    os << kl;
    for (size_t i = kl.size(); i < 14; ++i) os << ' ';
    std::string kt = to_string(row.cert.kappa2_lattice);
    os << kt;
    for (size_t i = kt.size(); i < 16; ++i) os << ' ';
    std::string w = wit.str();
    os << w;
    for (size_t i = w.size(); i < 14; ++i) os << ' ';
    os << (row.cert.verdict ? "positive" : "NON-POSITIVE") << "\n";
  }
  os << (rep.all_positive ? "all positive\n" : "FAILURES PRESENT\n");
  return os.str();
}

namespace {

std::mt19937_64 criterion_rng(std::uint64_t seed, int id) {
  return std::mt19937_64(seed * 1000003ull + static_cast<std::uint64_t>(id));
}

CriterionResult criterion1() {
  CriterionResult r{1, "section7 K-smallness verdicts", false, ""};
  ReproduceReport rep = reproduce_section7();
  std::ostringstream os;
  bool ok = rep.all_positive;
  for (const ReproduceRow& row : rep.rows) {
    ok = ok && row.cert.kappa2_lower > 0;
    os << row.label << "=" << to_string(row.cert.kappa2_lower) << " ";
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

CriterionResult criterion2() {
  CriterionResult r{2, "closed-form lattice defect minima", false, ""};
  bool ok = true;
  std::ostringstream os;
  for (int k = 1; k <= 4; ++k) {
    auto [v, w] = min_lattice_defect(build_embedding("so-sl", k), 3);
    ok = ok && v == 2;
    os << "so-sl k=" << k << ":" << to_string(v) << " ";
  }
  for (int n = 2; n <= 3; ++n) {
    auto [v, w] = min_lattice_defect(build_embedding("gl-sp", n), 3);
    ok = ok && v == 2;
    os << "gl-sp n=" << n << ":" << to_string(v) << " ";
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

std::vector<std::pair<int, std::vector<std::vector<long>>>> oracle_matrix() {
  return {{2, {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}}},
          {3, {{1, 0, 0}, {1, 1, 0}, {2, 0, 0}}}};
}

CriterionResult criterion3() {
  CriterionResult r{3, "Satake oracle equivalence", false, ""};
  bool ok = true;
  int checked = 0;
  for (const auto& [n, mus] : oracle_matrix()) {
    std::vector<long> primes = n == 2 ? std::vector<long>{2, 3, 5} : std::vector<long>{2, 3};
    for (const auto& mu_l : mus) {
      RVec mu = rvec(mu_l);
      VirtualCharacter vc = satake_omega(n, mu);
      for (long p : primes) {
        BruteforceSatake bf = satake_bruteforce(n, mu, p);
        std::map<RVec, Rational, RVecLess> sym;
        for (const auto& [lam, c] : vc.terms) {
          Rational v = c.eval(Rational(p));
          if (v != 0) sym[lam] = v;
        }
        ok = ok && sym == bf.terms;
        ++checked;
      }
    }
  }
  r.pass = ok;
  r.detail = std::to_string(checked) + " (mu,p) pairs compared exactly";
  return r;
}

CriterionResult criterion4() {
  CriterionResult r{4, "satake/cest expansion structure", false, ""};
  bool ok = true;
  RootDatum gl2 = build_root_datum(Family::A, 1);
  RootDatum gl3 = build_root_datum(Family::A, 2);
  int expansions = 0;
  for (const auto& [n, mus] : oracle_matrix()) {
    const RootDatum& gl = n == 2 ? gl2 : gl3;
    for (const auto& mu_l : mus) {
      RVec mu = rvec(mu_l);
      VirtualCharacter vc = satake_omega(n, mu);
      ++expansions;
      auto lead = vc.terms.find(mu);
      ok = ok && lead != vc.terms.end() && lead->second == LaurentHalfQ::one();
      for (const auto& [lam, c] : vc.terms) {
        if (lam == mu) continue;
        ok = ok && dominance_leq(gl, LatticeVector::coweight(lam), LatticeVector::coweight(mu));
        LaurentHalfQ qc = LaurentHalfQ::monomial_half(2) * c;
        for (long q : {2L, 3L, 5L, 101L}) {
          Rational v = qc.eval(Rational(q));
          Rational a = v < 0 ? Rational(-v) : v;
          ok = ok && a <= 2;
        }
      }
    }
  }
  r.pass = ok;
  r.detail = std::to_string(expansions) + " expansions: leading 1, triangular, |q C| <= 2";
  return r;
}

CriterionResult criterion5(std::uint64_t seed) {
  CriterionResult r{5, "delta profile sum identity", false, ""};
  auto rng = criterion_rng(seed, 5);
  std::uniform_int_distribution<long> coord(-5, 5);
  std::vector<RootDatum> data;
  for (int n = 1; n <= 4; ++n) data.push_back(build_root_datum(Family::A, n));
  data.push_back(build_root_datum(Family::B, 2));
  data.push_back(build_root_datum(Family::C, 2));
  for (int n = 2; n <= 4; ++n) data.push_back(build_root_datum(Family::D, n));
  data.push_back(build_root_datum(Family::G2, 2));
  bool ok = true;
  long trials = 0;
  for (const RootDatum& d : data) {
    for (int t = 0; t < 200; ++t) {
      RVec mu(d.ambient_dim);
      for (int i = 0; i < d.ambient_dim; ++i) mu[i] = coord(rng);
      DeltaProfile prof = delta_profile(d, mu);
      ok = ok && prof.total == star_norm2(d, mu);
      ++trials;
    }
  }
  r.pass = ok;
  r.detail = std::to_string(trials) + " random mu matched exactly";
  return r;
}

CriterionResult criterion6() {
  CriterionResult r{6, "sphere polynomial vs Hermite counts", false, ""};
  bool ok = true;
  int checked = 0;
  for (int n = 2; n <= 3; ++n) {
    RootDatum gl = build_root_datum(Family::A, n - 1);
    // Nonnegative dominant mu with entries <= 3.
    std::vector<RVec> mus;
    std::function<void(std::vector<long>&)> rec = [&](std::vector<long>& cur) {
      if (static_cast<int>(cur.size()) == n) {
        mus.push_back(rvec(cur));
        return;
      }
      long hi = cur.empty() ? 3 : cur.back();
      for (long v = hi; v >= 0; --v) {
        cur.push_back(v);
        rec(cur);
        cur.pop_back();
      }
    };
    std::vector<long> cur;
    rec(cur);
    for (const RVec& mu : mus) {
      QPoly poly = sphere_size_polynomial(gl, mu);
      Rational s2 = star_norm2(gl, mu);
      ok = ok && Rational(qpoly_degree(poly)) == s2;
      ok = ok && poly.rbegin()->second == 1;
      for (long p : {2L, 3L}) {
        Int count = Int(hnf_sphere(n, mu, p).size());
        ok = ok && qpoly_eval(poly, Rational(p)) == Rational(count);
        ++checked;
      }
    }
  }
  r.pass = ok;
  r.detail = std::to_string(checked) + " (mu,p) counts matched; degrees and leads exact";
  return r;
}

RMat random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<int> pick(0, 2);
  RMat y = RMat::Identity(2, 2);
  for (int step = 0; step < 4; ++step) {
    RMat e = RMat::Identity(2, 2);
    switch (pick(rng)) {
      case 0:
        e(0, 1) = small(rng);
        break;
      case 1:
        e(1, 0) = small(rng);
        break;
      default:
        e(0, 0) = 0;
        e(0, 1) = 1;
        e(1, 0) = -1;
        e(1, 1) = 0;
        break;
    }
    y = y * e;
  }
  return y;
}

CriterionResult criterion7(std::uint64_t seed) {
  CriterionResult r{7, "diagonal avoidance emptiness", false, ""};
  auto rng = criterion_rng(seed, 7);
  bool ok = true;
  int checked = 0;
  std::vector<std::vector<long>> nus = {{1, 0}, {2, 0}, {2, 1}, {3, 0}};
  for (auto kind : {IntersectionConfig::Kind::DiagPGL2, IntersectionConfig::Kind::DiagGL2}) {
    for (const auto& nu : nus) {
      for (long p : {2L, 3L}) {
        std::vector<std::pair<RMat, RMat>> twists = {{RMat::Identity(2, 2), RMat::Identity(2, 2)}};
        for (int t = 0; t < 10; ++t)
          twists.push_back({random_unimodular(rng), random_unimodular(rng)});
        for (const auto& [y1, y2] : twists) {
          IntersectionConfig cfg;
          cfg.kind = kind;
          cfg.p = p;
          cfg.y1 = y1;
          cfg.y2 = y2;
          RVec mu(4);
          mu << nu[0], nu[1], 0, 0;
          ok = ok && intersection_count(cfg, mu) == 0;
          ++checked;
        }
      }
    }
  }
  r.pass = ok;
  r.detail = std::to_string(checked) + " configurations all empty";
  return r;
}

CriterionResult criterion8(std::uint64_t seed) {
  CriterionResult r{8, "character nonvanishing search", false, ""};
  auto rng = criterion_rng(seed, 8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  bool ok = true;
  double min_max = 1e300;
  long succeeded = 0;
  for (int rank : {1, 2}) {
    RootDatum d = build_root_datum(Family::A, rank);
    int dim = d.ambient_dim;
    for (int t = 0; t < 1000; ++t) {
      TorusPoint<std::complex<double>> x;
      if (t == 0) {
        // Forced singular point: (i, -i, 1, ...).
        x.push_back({0.0, 1.0});
        x.push_back({0.0, -1.0});
        for (int i = 2; i < dim; ++i) x.push_back({1.0, 0.0});
      } else if (t == 1) {
        // Permutation-fixed point.
        double th = angle(rng);
        for (int i = 0; i < dim; ++i) x.push_back(std::polar(1.0, th));
      } else {
        for (int i = 0; i < dim; ++i) x.push_back(std::polar(1.0, angle(rng)));
      }
      auto [mu, val] = nonvanishing_search(d, x, 4);
      double a = std::sqrt(abs2(val));
      min_max = std::min(min_max, a);
      ++succeeded;
    }
  }
  // Exact spot-check at the Gaussian point x = (i, -i).
  {
    RootDatum a1 = build_root_datum(Family::A, 1);
    TorusPoint<GaussianRational> xg = {GaussianRational::i(),
                                       GaussianRational(0, -1)};
    auto [mu, val] = nonvanishing_search(a1, xg, 4);
    ok = ok && mu.coords == rvec({2, 0}) && val == GaussianRational(-1);
  }
  ok = ok && min_max > 1e-3;
  r.pass = ok;
  std::ostringstream os;
  os << succeeded << " searches succeeded; empirical min of max |chi| = " << min_max;
  r.detail = os.str();
  return r;
}

CriterionResult criterion9(std::uint64_t seed) {
  CriterionResult r{9, "amplifier stability across q", false, ""};
  auto rng = criterion_rng(seed, 9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  bool ok = true;
  std::ostringstream os;
  for (int n : {2, 3}) {
    double min101 = 1e300, min1009 = 1e300;
    for (int t = 0; t < 500; ++t) {
      std::vector<std::complex<double>> x;
      for (int i = 0; i < n; ++i) x.push_back(std::polar(1.0, angle(rng)));
      auto [mu_a, v_a] = amplifier_select(n, x, Rational(101), 3);
      auto [mu_b, v_b] = amplifier_select(n, x, Rational(1009), 3);
      min101 = std::min(min101, std::abs(v_a));
      min1009 = std::min(min1009, std::abs(v_b));
    }
    ok = ok && min101 > 0;
    ok = ok && std::abs(min1009 - min101) < 0.1 * min101;
    os << "GL" << n << ": min@101=" << min101 << " min@1009=" << min1009 << " ";
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

}  // namespace

std::set<int> criteria_for_module(const std::string& module) {
  if (module == "ksmall") return {1, 2};
  if (module == "satake") return {3, 4};
  if (module == "buildings") return {5, 6, 7};
  if (module == "charring") return {8};
  if (module == "amplifier") return {9};
  throw ContractError("unknown module for --only: " + module);
}

AcceptanceReport run_acceptance(const std::set<int>& only, std::uint64_t seed) {
  AcceptanceReport rep;
  rep.seed = seed;
  rep.all_pass = true;
  auto want = [&](int id) { return only.empty() || only.count(id) > 0; };
  std::vector<CriterionResult> all;
  if (want(1)) all.push_back(criterion1());
  if (want(2)) all.push_back(criterion2());
  if (want(3)) all.push_back(criterion3());
  if (want(4)) all.push_back(criterion4());
  if (want(5)) all.push_back(criterion5(seed));
  if (want(6)) all.push_back(criterion6());
  if (want(7)) all.push_back(criterion7(seed));
  if (want(8)) all.push_back(criterion8(seed));
  if (want(9)) all.push_back(criterion9(seed));
  for (const CriterionResult& c : all) rep.all_pass = rep.all_pass && c.pass;
  rep.results = std::move(all);
  return rep;
}

std::string to_json(const AcceptanceReport& rep) {
  Json j;
  j["seed"] = rep.seed;
  j["criteria"] = Json::array();
  for (const CriterionResult& c : rep.results) {
    Json cj;
    cj["id"] = c.id;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    j["criteria"].push_back(cj);
  }
  j["all_pass"] = rep.all_pass;
  return j.dump(2);
}

std::string to_text(const AcceptanceReport& rep) {
  std::ostringstream os;
  for (const CriterionResult& c : rep.results) {
    os << "criterion " << c.id << " [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
       << ": " << c.detail << "\n";
  }
  os << (rep.all_pass ? "ACCEPTANCE: all criteria pass\n" : "ACCEPTANCE: FAILURES\n");
  return os.str();
}

}  // namespace liecomb
