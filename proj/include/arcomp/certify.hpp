#pragma once

// Certification suites tying the symbolic engine to the matrix oracle:
// submodule-category objects over k[x]/(x^n) realized as triangular
// matrix algebra representations, almost-split verification of the mesh
// constructors, and the named claims exposed by the command line.

#include <string>
#include <vector>

#include "arcomp/oracle.hpp"
#include "json.hpp"

namespace arcomp::certify {

using oracle::Mat;
using oracle::Morphism;
using oracle::PathAlg;
using oracle::Rep;
using oracle::Rng;
using oracle::SesWitness;
using oracle::u64;

// Working context for the submodule category of k[x]/(x^n), realized as
// modules over the lower triangular 2x2 matrix algebra.
class SLnContext {
public:
  SLnContext(int n, u64 p);
  int n() const { return n_; }
  const PathAlg& base() const { return base_; }
  const PathAlg& t2() const { return t2_; }

  Rep module(int t) const; // M_t = k[x]/(x^t) over the base, 1 <= t <= n
  // object (A -> B) with the connecting map given on the base modules
  Rep mono_object(const Rep& A, const Rep& B, const Mat& f) const;
  Rep boundary_zero(int t) const; // (0 -> M_t)
  Rep boundary_diag(int t) const; // (M_t = M_t)
  Rep boundary_syz(int t) const;  // (Omega M_t -> Lambda), 1 <= t <= n-1
  Rep proj_zero() const;          // (0 -> Lambda)
  Rep proj_diag() const;          // (Lambda = Lambda)
  // injectivity of the connecting map, an iso-invariant of objects
  bool is_mono_object(const Rep& X) const;

  // ambient almost split sequence 0 -> M_t -> M_{t+1} + M_{t-1} -> M_t -> 0
  struct BaseSeq {
    Rep A, B, C;
    Mat f_up, f_down; // components of the mono
    Mat g_up, g_down; // components of the epi
  };
  BaseSeq base_sequence(int t) const;

  // the three induced sequences in the submodule category
  SesWitness mesh_ending_at_zero(int t) const;
  SesWitness mesh_ending_at_diag(int t) const;
  SesWitness mesh_ending_at_syz(int t) const;

  // all indecomposables of the submodule category (length at most four:
  // boundary objects, projective-injectives, and middle-term summands)
  std::vector<Rep> enumerate_indecomposables(Rng& rng) const;

private:
  int n_;
  PathAlg base_;
  PathAlg t2_;
};

struct CertResult {
  std::string claim;
  std::string instance;
  bool ok = false;
  std::string witness; // failure detail when not ok
};

nlohmann::json results_to_json(const std::vector<CertResult>& rs);

// Named certification claims (see the command line `certify`):
//   simple-translate-iso : translate iterates of simples over the
//                          preprojective algebra match the label engine
//   ext-vanishing        : Ext^1 vanishing over the Auslander algebra
//   socle-nonvanishing   : stable Hom(S_i, Omega S_{n-i}) != 0
//   mesh-certification   : the induced sequences are almost split
//   translate-table      : dual-transpose matches the Nakayama tables
std::vector<CertResult> run_claim(const std::string& claim, int n_lo, int n_hi, u64 p, u64 seed);
std::vector<std::string> claim_names();

} // namespace arcomp::certify
