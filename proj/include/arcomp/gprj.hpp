#pragma once

// Finite descriptions of a stable Gorenstein-projective category:
// indecomposables with translation, syzygy, projective covers, minimal
// left projective approximations and almost-split middle terms. These
// tables are the input alphabet for the monomorphism-category engine.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace arcomp::gprj {

using Id = std::string;
using DimVec = std::vector<int>;

class DescriptionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct IndecObj {
  Id id;
  bool projective = false;
  DimVec dim;
};

// Reference to a boundary-form vertex of the monomorphism category,
// used by the optional radical-approximation data (sink placement of
// projective-injective vertices during knitting).
struct BoundaryRef {
  char form = 'c'; // 'a' = (0 -> G), 'b' = (G = G), 'c' = (Omega G -> P_G)
  Id base;
  bool operator==(const BoundaryRef&) const = default;
};

enum class FiniteType { Finite, Infinite, Unknown };

struct Description {
  std::string name;
  std::vector<IndecObj> objects;
  std::map<Id, Id> tau, tau_inv;    // on non-projectives
  std::map<Id, Id> syz, cosyz;      // on non-projectives
  std::map<Id, std::vector<Id>> proj_cover;  // multiset P_G
  std::map<Id, std::vector<Id>> left_approx; // multiset I_G; cokernel = cosyz
  std::map<Id, std::vector<Id>> ar_middle;   // multiset, middle of the mesh ending there
  FiniteType finite_type = FiniteType::Unknown;

  // Optional sink data for projective-injective placement: for a
  // projective P, the non-projective summands of a minimal right
  // approximation of rad P, and the boundary vertices approximating
  // (rad P -> P). Supplied by built-ins; must come with hand tables
  // when finite knitting is wanted (never inferred).
  std::map<Id, std::vector<Id>> rad_approx;
  std::map<Id, std::vector<BoundaryRef>> rad_mono_approx;

  // lookups
  bool has(const Id& g) const;
  const IndecObj& obj(const Id& g) const;
  bool is_projective(const Id& g) const;
  const DimVec& dim(const Id& g) const;
  std::vector<Id> nonprojectives() const;
  std::vector<Id> projectives() const;

  Id apply_tau(const Id& g, long k) const; // tau^k, any sign
  Id apply_syz(const Id& g, long k) const; // Omega^k, any sign

  void validate() const; // throws DescriptionError
};

// Self-injective Nakayama algebra N(m, l): cyclic quiver on m vertices,
// arrows v -> v-1 (mod m), paths of length l equal to zero. Objects
// M(v, t) for 1 <= v <= m, 1 <= t <= l; projectives are the M(v, l).
// The orientation convention is calibrated so the three-vertex, Loewy
// length three example reproduces its published theta-orbits; the
// calibration is asserted in the test suite.
Description nakayama_description(int m, int l);
Id m_id(int v, int t);                        // "M(v,t)"
std::pair<int, int> parse_m_id(const Id& id); // inverse of m_id

// theta = tau . Omega^{-1} . tau^2; asserts the two alternative
// factorizations agree object-wise.
Id theta(const Description& d, const Id& g);
Id theta_inv(const Description& d, const Id& g);
Id theta_pow(const Description& d, const Id& g, long k);

struct ThetaOrbit {
  std::vector<Id> members; // cyclic theta-application order
};
std::vector<ThetaOrbit> theta_orbits(const Description& d);

// Orbit containing g, starting at the lexicographically smallest member.
ThetaOrbit theta_orbit_of(const Description& d, const Id& g);
Id theta_orbit_rep(const Description& d, const Id& g);

// JSON table format (keys: objects, tau, syzygy, proj_cover,
// left_approx, ar_middle, finite_type, plus the optional rad data).
Description description_from_json(const nlohmann::json& doc);
Description description_from_string(const std::string& text);
nlohmann::json description_to_json(const Description& d);

// The hand-entered table of the stable Gorenstein-projective category
// of the triangular matrix algebra over k[x]/(x^2) (objects G, H, K).
const std::string& t2_kx2_table_text();
Description t2_kx2_description();

} // namespace arcomp::gprj
