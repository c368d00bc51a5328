#pragma once

// Label calculus for simple modules over the stable Cohen-Macaulay
// Auslander algebra A of a CM-finite description: the translation
// tau_A acting on shifted simple labels Omega^k_A S_G, the induced
// orbit tables over preprojective algebras of type A, and the lambda
// map from monomorphism-category components to A-components.

#include <string>
#include <vector>

#include "arcomp/gprj.hpp"
#include "json.hpp"

namespace arcomp::labels {

using gprj::Description;
using gprj::Id;

class LabelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Omega^shift_A S_base. Labels are kept in a canonical normal form with
// shift in {-1, 0, +1}: three A-syzygies of a simple label are again a
// simple label, at the base's syzygy (forced by composing the one-step
// and two-step translation identities, which hold simultaneously).
struct SimpleLabel {
  int shift = 0;
  Id base;
  bool operator==(const SimpleLabel&) const = default;
  bool operator<(const SimpleLabel& o) const {
    return std::tie(base, shift) < std::tie(o.base, o.shift);
  }
};

std::string to_string(const SimpleLabel& s);
nlohmann::json to_json(const SimpleLabel& s);

// Normalizes an arbitrary shift into {-1, 0, +1} using the rule
// Omega^3_A S_G = S_{Omega G}.
SimpleLabel normalize(const Description& d, int shift, const Id& base);

// Applies Omega^k_A to a label (k any integer), renormalizing.
SimpleLabel omega_a(const Description& d, const SimpleLabel& s, long k);

// j-fold translation of a label. Errors when the base is G-semisimple
// and j is not a multiple of 3 (the theorem's hypothesis).
SimpleLabel tau_a(const Description& d, const SimpleLabel& s, long j);

// Orbit of s under tau_a, listed from s; period included.
struct LabelOrbit {
  std::vector<SimpleLabel> orbit;
  long period = 0;
};
LabelOrbit tau_a_orbit(const Description& d, const SimpleLabel& s, long bound = 0);

// Preprojective algebra of type A_{n-1} (stable CM Auslander algebra of
// k[x]/(x^n)): ordered tau_A-orbit of the simple S_i. Six labels when
// i != n-i, three when i = n-i, matching the published clauses exactly.
std::vector<SimpleLabel> preprojective_tau_table(int n, int i);

// Number of stable components containing a simple module, for n >= 6:
// (n-1)/2 for odd n, n/2 for even n; asserted against the theta-orbit
// count of the underlying Nakayama description.
long simple_component_count(int n);

// Mouth of the tube containing S_i, in the published cyclic order
// (the inverse-translation order starting at Omega_A S_i).
std::vector<SimpleLabel> tube_mouth(int n, int i);

// Coordinates in a tube: mouth index r (mod tube rank) and quasi-length m.
struct TubeCoord {
  long r = 1;
  long m = 1;
  bool operator==(const TubeCoord&) const = default;
};

// j-fold translation of X_i^r[m]: shifts the mouth index by j and
// reports the equivalent A-syzygy power (in {-4..1} for rank 6 tubes,
// {-1,0,1} for rank 3).
std::pair<TubeCoord, int> tube_translate(int n, int i, TubeCoord c, long j);

// Component map: sends each stable component of the monomorphism
// category containing a boundary vertex to the component of the stable
// CM Auslander algebra containing the matching simple, or to the empty
// marker when the source collapses (semisimple-type modules).
struct LambdaReport {
  struct Row {
    std::string s_component;
    std::string a_component; // "(empty)" marker when collapsed
    bool collapsed = false;
    bool infinite = false;
  };
  std::vector<Row> rows;
  bool surjective = true;
  bool injective_on_infinite = true;
};
LambdaReport lambda_map(const Description& d, int depth);

} // namespace arcomp::labels
