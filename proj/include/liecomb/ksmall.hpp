#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liecomb/root_datum.hpp"

namespace liecomb {

// Cocharacter-lattice embedding X_*(T_K) -> X_*(T) for one family instance.
// Supported tags (k or n is the size parameter):
//   so-sl       SO(k,k)   in SL_{2k}   (k = 1 degenerates to a torus K)
//   so-sl-odd   SO(k,k+1) in SL_{2k+1}
//   gl-sp       GL_n      in Sp_{2n}
//   so-so-even  SO(k,k)^2               in SO(2k,2k)
//   so-so-odd   SO(k,k) x SO(k,k+1)     in SO(2k,2k+1)
//   so-odd-odd  SO(k,k+1) x SO(k+1,k)   in SO(2k+1,2k+1)
//   su2-g2      SU(2)xSU(2)             in G_2
struct CocharEmbedding {
  std::string tag;
  int size = 0;
  RootDatum K_datum;
  RootDatum G_datum;
  RMat iota;  // G_ambient x K_ambient, injective on the lattice
};

CocharEmbedding build_embedding(const std::string& tag, int size);

std::vector<std::string> embedding_tags();

// Doubled defect star_norm2_G(iota mu) - 2 star_norm2_K(mu).
Rational defect2(const CocharEmbedding& E, const RVec& mu);

// Exhaustive minimum of defect2 over nonzero integer mu in the sup-norm box.
std::pair<Rational, RVec> min_lattice_defect(const CocharEmbedding& E, int box_radius);

struct KSmallCertificate {
  std::string tag;
  int size = 0;
  Rational kappa2_lower;    // certified min of defect2 on the unit sup-norm sphere
  Rational kappa2_lattice;  // min over lattice points in the radius-3 box
  RVec witness_mu;          // lattice minimizer
  int lp_count = 0;
  bool verdict = false;  // kappa2_lower > 0
};

// Certifies positivity of the defect by exact face-LPs over the K-dominant
// chamber, one per facet of the sup-norm unit box, with G-side functionals
// generated lazily from Weyl words.
KSmallCertificate verify_ksmall(const CocharEmbedding& E, int box_radius = 3);

}  // namespace liecomb
