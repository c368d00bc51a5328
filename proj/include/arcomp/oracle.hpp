#pragma once

// Independent ground truth: explicit quiver-with-relations algebras,
// matrix representations over F_p, Hom / stable Hom / Ext^1 / syzygy /
// dual-transpose translation by exact linear algebra, and certification
// of the symbolic engine's outputs.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arcomp/ffla.hpp"
#include "json.hpp"

namespace arcomp::oracle {

using ffla::Fp;
using ffla::Mat;
using ffla::u64;

class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

struct Arrow {
  int src = 0, tgt = 0; // 0-based vertices
  std::string name;
};

// One relation: a linear combination of parallel paths, each path a
// sequence of arrow indices composed left to right.
struct RelTerm {
  long coeff = 1;
  std::vector<int> path;
};
using Relation = std::vector<RelTerm>;

// Path algebra modulo an admissible ideal, with the residue path basis
// computed degree by degree over F_p. Relations must be homogeneous in
// path length (all our presentations are).
class PathAlg {
public:
  PathAlg(Fp field, int nvertices, std::vector<Arrow> arrows, std::vector<Relation> relations,
          int degree_cap = 64);

  const Fp& field() const { return F_; }
  int vertices() const { return nv_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return rels_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  struct BasisPath {
    int src = 0, tgt = 0;
    std::vector<int> word; // arrow indices
  };
  const std::vector<BasisPath>& basis() const { return basis_; }
  // indices of basis paths starting at v
  const std::vector<int>& basis_from(int v) const { return from_[static_cast<std::size_t>(v)]; }
  // right multiplication: basis element b times arrow a, as a vector of
  // (basis index, coefficient)
  const std::vector<std::pair<int, u64>>& right_mult(int b, int a) const;

private:
  Fp F_;
  int nv_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> rels_;
  std::vector<BasisPath> basis_;
  std::vector<std::vector<int>> from_;
  std::vector<std::vector<std::vector<std::pair<int, u64>>>> rmul_; // [basis][arrow]
  void compute_basis(int cap);
};

PathAlg build_nakayama(int m, int l, u64 p);
// Auslander algebra of k[x]/(x^n): n vertices, arrows a_i: i -> i+1 and
// b_{i+1}: i+1 -> i, relations a_1 b_2 = 0 and a_i b_{i+1} = b_i a_{i-1}.
PathAlg build_auslander(int n, u64 p);
// Preprojective algebra of type A_{n-1} (n >= 2): the Auslander algebra
// presentation with the last vertex removed.
PathAlg build_preprojective(int n, u64 p);
// Lower triangular 2x2 matrix algebra over a base algebra: doubled
// vertices, connecting arrows, commutation relations.
PathAlg build_t2(const PathAlg& base);
PathAlg opposite(const PathAlg& a);

// Matrix representation: dims per vertex, a matrix per arrow mapping
// the source space into the target space (columns act).
struct Rep {
  std::vector<int> dims;
  std::vector<Mat> mats;
  int total() const;
  bool operator==(const Rep&) const = default;
};

bool relations_hold(const PathAlg& A, const Rep& X);
Rep zero_rep(const PathAlg& A);
Rep simple_rep(const PathAlg& A, int v);
Rep projective_rep(const PathAlg& A, int v);
Rep direct_sum(const PathAlg& A, const std::vector<Rep>& parts);
// k[x]/(x^l)-style module M(v,t) over build_nakayama(m,l)
Rep nakayama_module(const PathAlg& A, int m, int l, int v, int t);
Rep dual_rep(const PathAlg& A, const Rep& X); // representation of opposite(A)

// A morphism X -> Y is one matrix per vertex commuting with all arrows.
using Morphism = std::vector<Mat>;
std::vector<Morphism> hom_basis(const PathAlg& A, const Rep& X, const Rep& Y);
int hom_dim(const PathAlg& A, const Rep& X, const Rep& Y);
int stable_hom_dim(const PathAlg& A, const Rep& X, const Rep& Y);
int ext1_dim(const PathAlg& A, const Rep& X, const Rep& Y);

Morphism compose(const PathAlg& A, const Morphism& f, const Morphism& g); // f after g
Morphism identity_morphism(const Rep& X);
bool is_invertible_morphism(const PathAlg& A, const Rep& X, const Rep& Y, const Morphism& f);

// Minimal projective cover data: P -> X with P = sum of P_{v_k}.
struct Cover {
  std::vector<int> summands; // vertices of the projective summands
  Rep P;
  Morphism onto; // P -> X, surjective
};
Cover projective_cover(const PathAlg& A, const Rep& X);
bool is_projective_rep(const PathAlg& A, const Rep& X);

// Kernel of the cover, with its inclusion into P.
struct Syzygy {
  Rep omega;
  Morphism incl; // omega -> P
  Cover cover;
};
Syzygy syzygy_data(const PathAlg& A, const Rep& X);
Rep syzygy_rep(const PathAlg& A, const Rep& X);
Rep cosyzygy_rep(const PathAlg& A, const Rep& X);
Rep omega_power(const PathAlg& A, const Rep& X, long k);

// Dual of the transpose from a minimal projective presentation.
// Errors when X is projective.
Rep tau_dtr(const PathAlg& A, const Rep& X);

bool iso_check(const PathAlg& A, const Rep& X, const Rep& Y, Rng& rng);
bool is_indecomposable(const PathAlg& A, const Rep& X, Rng& rng);
// Splits X into indecomposable summands.
std::vector<Rep> decompose(const PathAlg& A, const Rep& X, Rng& rng);

struct SesWitness {
  Rep left, middle, right;
  Morphism u; // left -> middle
  Morphism v; // middle -> right
};
bool ses_exact(const PathAlg& A, const SesWitness& w);

struct AsReport {
  bool exact = false;
  bool nonsplit = false;
  bool left_indec = false;
  bool right_indec = false;
  bool factorization = false;
  std::vector<std::string> failures;
  bool pass() const { return exact && nonsplit && left_indec && right_indec && factorization; }
};
// Checks that w is an almost split sequence relative to the ambient
// finite list of indecomposables: exact, non-split, indecomposable end
// terms, and every non-retraction T -> right (T in the test set)
// factors through v.
AsReport verify_almost_split(const PathAlg& A, const SesWitness& w,
                             const std::vector<Rep>& test_set, Rng& rng);

// Builds the almost split sequence ending at the non-projective
// indecomposable X, via the socle of Ext^1(X, tau X) over End(X).
SesWitness construct_almost_split(const PathAlg& A, const Rep& X, Rng& rng);
// Same, but with a prescribed left-hand term (the translate inside an
// exact subcategory, when it differs from the module-category one).
SesWitness construct_almost_split_to(const PathAlg& A, const Rep& X, const Rep& T, Rng& rng);

} // namespace arcomp::oracle
