#include <complex>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liecomb/buildings.hpp"
#include "liecomb/charring.hpp"
#include "liecomb/ksmall.hpp"
#include "liecomb/report.hpp"
#include "liecomb/satake.hpp"

namespace {

using liecomb::Rational;
using liecomb::RVec;
using Json = nlohmann::ordered_json;

RVec parse_vec(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return liecomb::rvec(out);
}

// Complex literals "a", "bi", "a+bi", "a-bi", with "i" meaning "1i".
std::complex<double> parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw liecomb::ContractError("empty complex literal");
  auto parse_part = [](std::string t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return std::stod(t);
  };
  size_t ipos = s.find('i');
  if (ipos == std::string::npos) return {std::stod(s), 0.0};
  // Split real part from the imaginary term: find the sign separating them.
  std::string imag_str = s.substr(0, ipos);
  std::string real_str;
  for (size_t k = imag_str.size(); k-- > 1;) {
    if ((imag_str[k] == '+' || imag_str[k] == '-') && imag_str[k - 1] != 'e' &&
        imag_str[k - 1] != 'E') {
      real_str = imag_str.substr(0, k);
      imag_str = imag_str.substr(k);
      break;
    }
  }
  double re = real_str.empty() ? 0.0 : std::stod(real_str);
  return {re, parse_part(imag_str)};
}

std::vector<std::complex<double>> parse_torus_point(const std::string& s) {
  std::vector<std::complex<double>> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

liecomb::Family parse_family(const std::string& f) {
  if (f == "A") return liecomb::Family::A;
  if (f == "B") return liecomb::Family::B;
  if (f == "C") return liecomb::Family::C;
  if (f == "D") return liecomb::Family::D;
  if (f == "G2") return liecomb::Family::G2;
  if (f == "Torus") return liecomb::Family::Torus;
  throw liecomb::CapabilityError("unknown family: " + f);
}

std::vector<std::string> vec_strings(const RVec& v) {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(liecomb::to_string(v[i]));
  return out;
}

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
  long cap = 100000;
};

int run(int argc, char** argv) {
  CLI::App app{"exact computational Lie theory toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for sampling harnesses");
  app.add_option("--threads", opt.threads, "worker threads (accepted; kernels are serial)");
  app.add_option("--cap", opt.cap, "resource cap for enumerations");

  // ksmall verify
  auto* ksmall = app.add_subcommand("ksmall", "K-smallness certification");
  auto* kverify = ksmall->add_subcommand("verify", "certify one embedding family");
  std::string kfamily = "so-sl";
  int kk = 2, kbox = 3;
  kverify->add_option("--family", kfamily, "family tag")->required();
  kverify->add_option("--k", kk, "size parameter")->required();
  kverify->add_option("--box", kbox, "lattice scan radius");

  // charring eval
  auto* charring = app.add_subcommand("charring", "Weyl characters");
  auto* ceval = charring->add_subcommand("eval", "evaluate a character");
  std::string cfamily = "A", clambda, cx;
  int crank = 1;
  ceval->add_option("--family", cfamily)->required();
  ceval->add_option("--rank", crank)->required();
  ceval->add_option("--lambda", clambda, "dominant weight, comma separated")->required();
  ceval->add_option("--x", cx, "torus point, comma-separated complex literals")->required();

  // satake table / oracle
  auto* satake = app.add_subcommand("satake", "Satake transforms");
  auto* stable = satake->add_subcommand("table", "symbolic expansion of S omega_mu");
  int sn = 2;
  std::string smu, sq = "sym";
  stable->add_option("--n", sn)->required();
  stable->add_option("--mu", smu)->required();
  stable->add_option("--q", sq, "sym or a rational value");
  auto* soracle = satake->add_subcommand("oracle", "brute-force transform at a prime");
  int on = 2;
  long op = 3;
  std::string omu;
  soracle->add_option("--n", on)->required();
  soracle->add_option("--mu", omu)->required();
  soracle->add_option("--p", op)->required();

  // buildings delta / sphere / intersect
  auto* buildings = app.add_subcommand("buildings", "counting layer");
  auto* bdelta = buildings->add_subcommand("delta", "delta profile");
  std::string bfamily = "A", bmu;
  int brank = 1;
  bdelta->add_option("--family", bfamily)->required();
  bdelta->add_option("--rank", brank)->required();
  bdelta->add_option("--mu", bmu)->required();
  auto* bsphere = buildings->add_subcommand("sphere", "sphere size polynomial");
  int bn = 2;
  std::string bsmu;
  long batq = 0;
  bsphere->add_option("--n", bn)->required();
  bsphere->add_option("--mu", bsmu)->required();
  bsphere->add_option("--at-q", batq, "also evaluate at this prime");
  auto* bintersect = buildings->add_subcommand("intersect", "intersection count");
  std::string bconfig = "full-gl2", bimu, btwist = "identity";
  long bp = 2;
  bintersect->add_option("--config", bconfig,
                         "diag-gl2 | diag-pgl2 | torus-gl2 | full-gl2");
  bintersect->add_option("--mu", bimu)->required();
  bintersect->add_option("--p", bp);
  bintersect->add_option("--twist", btwist, "identity | random");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "regenerate the verification table");
  std::string rfamily;
  int rk = 0;
  reproduce->add_option("--family", rfamily, "restrict to one family tag");
  reproduce->add_option("--k", rk, "size parameter for --family");

  // acceptance
  auto* acceptance = app.add_subcommand("acceptance", "run the acceptance criteria");
  std::string amodule;
  acceptance->add_option("--only", amodule, "ksmall|satake|buildings|charring|amplifier");

  // Global flags may appear after the subcommand, e.g. `ksmall verify --json`.
  std::function<void(CLI::App*)> allow_globals = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      allow_globals(sub);
    }
  };
  allow_globals(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (kverify->parsed()) {
    liecomb::CocharEmbedding E = liecomb::build_embedding(kfamily, kk);
    liecomb::KSmallCertificate cert = liecomb::verify_ksmall(E, kbox);
    if (opt.json) {
      Json j;
      j["family"] = cert.tag;
      j["size"] = cert.size;
      j["kappa2_lower"] = liecomb::to_string(cert.kappa2_lower);
      j["kappa2_lattice"] = liecomb::to_string(cert.kappa2_lattice);
      j["witness"] = vec_strings(cert.witness_mu);
      j["lp_count"] = cert.lp_count;
      j["verdict"] = cert.verdict ? "positive" : "non-positive";
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "family " << cert.tag << " size " << cert.size << "\n"
                << "kappa2_lower   " << cert.kappa2_lower << "\n"
                << "kappa2_lattice " << cert.kappa2_lattice << " at "
                << liecomb::to_string(cert.witness_mu) << "\n"
                << "lp_count " << cert.lp_count << "\n"
                << "verdict " << (cert.verdict ? "positive" : "non-positive") << "\n";
    }
    return cert.verdict ? 0 : 3;
  }

  if (ceval->parsed()) {
    liecomb::RootDatum d = liecomb::build_root_datum(parse_family(cfamily), crank);
    RVec lam = parse_vec(clambda);
    auto x = parse_torus_point(cx);
    std::complex<double> v =
        liecomb::char_value(d, liecomb::LatticeVector::weight(lam), x, opt.cap);
    if (opt.json) {
      Json j;
      j["family"] = cfamily;
      j["rank"] = crank;
      j["lambda"] = vec_strings(lam);
      j["value_re"] = v.real();
      j["value_im"] = v.imag();
      j["exact"] = false;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "chi(" << liecomb::to_string(lam) << ") = " << v.real();
      if (v.imag() != 0) std::cout << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
      std::cout << "\n";
    }
    return 0;
  }

  if (stable->parsed()) {
    RVec mu = parse_vec(smu);
    liecomb::VirtualCharacter vc = liecomb::satake_omega(sn, mu);
    Json terms = Json::array();
    for (const auto& [lam, c] : vc.terms) {
      Json t;
      t["lambda"] = vec_strings(lam);
      if (sq == "sym")
        t["coeff"] = c.str();
      else
        t["coeff"] = liecomb::to_string(c.eval(liecomb::parse_rational(sq)));
      terms.push_back(t);
    }
    Json j;
    j["mu"] = vec_strings(mu);
    j["q"] = sq;
    j["terms"] = terms;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (soracle->parsed()) {
    RVec mu = parse_vec(omu);
    liecomb::BruteforceSatake bf = liecomb::satake_bruteforce(on, mu, op);
    Json terms = Json::array();
    for (const auto& [lam, c] : bf.terms) {
      Json t;
      t["lambda"] = vec_strings(lam);
      t["coeff"] = liecomb::to_string(c);
      terms.push_back(t);
    }
    Json j;
    j["mu"] = vec_strings(mu);
    j["p"] = op;
    j["sphere_size"] = bf.sphere_size;
    j["terms"] = terms;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (bdelta->parsed()) {
    liecomb::RootDatum d = liecomb::build_root_datum(parse_family(bfamily), brank);
    liecomb::DeltaProfile prof = liecomb::delta_profile(d, parse_vec(bmu));
    Json j;
    j["mu"] = vec_strings(prof.mu);
    j["values"] = prof.values;
    j["total"] = liecomb::to_string(prof.total);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (bsphere->parsed()) {
    liecomb::RootDatum d = liecomb::build_root_datum(liecomb::Family::A, bn - 1);
    RVec mu = parse_vec(bsmu);
    liecomb::QPoly poly = liecomb::sphere_size_polynomial(d, mu);
    Json coeffs = Json::array();
    for (const auto& [e, c] : poly) {
      Json t;
      t["exp"] = e;
      t["coeff"] = c.str();
      coeffs.push_back(t);
    }
    Json j;
    j["mu"] = vec_strings(mu);
    j["poly"] = coeffs;
    if (batq > 0)
      j["at_q"] = liecomb::to_string(liecomb::qpoly_eval(poly, Rational(batq)));
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (bintersect->parsed()) {
    liecomb::IntersectionConfig cfg;
    if (bconfig == "diag-gl2")
      cfg.kind = liecomb::IntersectionConfig::Kind::DiagGL2;
    else if (bconfig == "diag-pgl2")
      cfg.kind = liecomb::IntersectionConfig::Kind::DiagPGL2;
    else if (bconfig == "torus-gl2")
      cfg.kind = liecomb::IntersectionConfig::Kind::TorusGL2;
    else if (bconfig == "full-gl2")
      cfg.kind = liecomb::IntersectionConfig::Kind::FullGL2;
    else
      throw liecomb::CapabilityError("unknown config: " + bconfig);
    cfg.p = bp;
    RVec mu = parse_vec(bimu);
    bool diag = cfg.kind == liecomb::IntersectionConfig::Kind::DiagGL2 ||
                cfg.kind == liecomb::IntersectionConfig::Kind::DiagPGL2;
    if (diag && mu.size() == 2) {
      RVec mu4(4);
      mu4 << mu[0], mu[1], 0, 0;
      mu = mu4;
    }
    if (btwist == "random") {
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<long> small(-3, 3);
      auto elem = [&]() {
        liecomb::RMat e = liecomb::RMat::Identity(2, 2);
        e(0, 1) = small(rng);
        liecomb::RMat f = liecomb::RMat::Identity(2, 2);
        f(1, 0) = small(rng);
        liecomb::RMat prod = e * f;
        return prod;
      };
      cfg.y1 = elem();
      cfg.y2 = elem();
    }
    liecomb::BuildingCountReport rep = liecomb::buildingcount_check(cfg, mu);
    Json j;
    j["config"] = bconfig;
    j["p"] = bp;
    j["mu"] = vec_strings(mu);
    j["count"] = rep.count.str();
    j["bound"] = liecomb::to_string(rep.bound);
    j["ratio"] = rep.ratio;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (reproduce->parsed()) {
    liecomb::ReproduceReport rep = rfamily.empty()
                                       ? liecomb::reproduce_section7()
                                       : liecomb::reproduce_family(rfamily, rk);
    std::cout << (opt.json ? liecomb::to_json(rep) + "\n" : liecomb::to_text(rep));
    return rep.all_positive ? 0 : 3;
  }

  if (acceptance->parsed()) {
    std::set<int> only;
    if (!amodule.empty()) only = liecomb::criteria_for_module(amodule);
    liecomb::AcceptanceReport rep = liecomb::run_acceptance(only, opt.seed);
    std::cout << (opt.json ? liecomb::to_json(rep) + "\n" : liecomb::to_text(rep));
    return rep.all_pass ? 0 : 3;
  }

  std::cerr << "no action selected\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const liecomb::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 2;
  } catch (const liecomb::ContractError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const liecomb::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
