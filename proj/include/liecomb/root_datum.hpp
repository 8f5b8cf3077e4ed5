#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecomb/errors.hpp"
#include "liecomb/rational.hpp"

namespace liecomb {

// Split families realized in the explicit coordinates used throughout:
//   A,n   : SL_{n+1}-style in Z^{n+1}, roots e_i - e_j
//   B,n   : SO(n,n+1) in Z^n, roots +-e_i+-e_j, +-e_i
//   C,n   : Sp_{2n} in Z^n, roots +-e_i+-e_j, +-2e_i
//   D,n   : SO(n,n) in Z^n, roots +-e_i+-e_j
//   G2    : the SU(2)xSU(2)-adapted realization in Z^2 with root list
//           {(+-2,0),(0,+-2),(+-1,+-1),(+-1,+-3)}
//   Torus : no roots (used for torus subgroups and degenerate embeddings)
enum class Family { A, B, C, D, G2, Torus };

std::string family_name(Family f);

enum class Side { Weight, Coweight };

// A lattice vector tagged with the side it lives on.  Coordinates are kept
// as exact rationals; lattice vectors proper are integral, but cone work
// (face LPs) reuses the same type with rational coordinates.
struct LatticeVector {
  RVec coords;
  Side side = Side::Coweight;

  static LatticeVector weight(RVec c) { return {std::move(c), Side::Weight}; }
  static LatticeVector coweight(RVec c) { return {std::move(c), Side::Coweight}; }
};

struct RootDatum {
  Family family = Family::Torus;
  int rank = 0;         // rank parameter of the family tag
  int ambient_dim = 0;  // d: vectors live in Z^d
  std::vector<RVec> roots;    // character coordinates
  std::vector<RVec> coroots;  // cocharacter coordinates, matched index-wise
  std::vector<int> positive_indices;
  std::vector<int> simple_indices;
  RVec two_rho;  // sum of positive roots

  const RVec& simple_root(size_t k) const { return roots[simple_indices[k]]; }
  const RVec& simple_coroot(size_t k) const { return coroots[simple_indices[k]]; }
  size_t num_simple() const { return simple_indices.size(); }

  bool is_dominant(const LatticeVector& v) const;
};

RootDatum build_root_datum(Family family, int rank);

// Rank-d datum with empty root system.
RootDatum make_torus_datum(int dim);

// Block-diagonal join of two data (roots padded with zeros).
RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

// Reflection in the k-th simple root, acting on either side.
RVec apply_simple(const RootDatum& datum, size_t k, const RVec& v, Side side);

// Reflection in an arbitrary root index.
RVec apply_reflection(const RootDatum& datum, int root_index, const RVec& v, Side side);

// Dominant representative of the orbit of v, together with the word of
// simple reflections carrying v to it (applied left to right).
std::pair<LatticeVector, std::vector<int>> dominant_rep(const RootDatum& datum,
                                                        const LatticeVector& v);

// Full Weyl orbit by closure under simple reflections; throws ResourceError
// past the cap.  Result is sorted lexicographically.
std::vector<RVec> weyl_orbit(const RootDatum& datum, const LatticeVector& v,
                             size_t cap = 1000000);

// Doubled *-norm <mu^+, 2rho> of a coweight-side vector.
Rational star_norm2(const RootDatum& datum, const LatticeVector& mu);
Rational star_norm2(const RootDatum& datum, const RVec& mu_coweight);

// True iff mu - lam is a nonnegative integer combination of the simple
// (co)roots of the side both vectors live on.  Both inputs must be dominant.
bool dominance_leq(const RootDatum& datum, const LatticeVector& lam,
                   const LatticeVector& mu);

// Solves diff = sum c_k * basis_k exactly; empty if diff is outside the span.
std::optional<std::vector<Rational>> decompose_in_basis(const std::vector<RVec>& basis,
                                                        const RVec& diff);

// Materialized Weyl group element: matrix action on the character side plus
// Coxeter length and a reduced word.
struct WeylElement {
  RMat weight_action;
  int length = 0;
  std::vector<int> word;
};

// Breadth-first closure of the simple reflections; throws ResourceError past
// the cap.  Identity first, then by increasing length.
std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, size_t cap = 1000000);

unsigned long expected_weyl_order(Family family, int rank);

// Applies a word of simple reflections (left to right) on the chosen side.
RVec apply_word(const RootDatum& datum, const std::vector<int>& word, const RVec& v,
                Side side);

// JSON document {family, rank, roots, coroots, positive, simple} with
// lexicographically deterministic ordering.
std::string to_json(const RootDatum& datum);

}  // namespace liecomb
