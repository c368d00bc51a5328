#pragma once

// Symbolic engine for the monomorphism category over a finite stable
// Gorenstein-projective description: boundary vertices, the three mesh
// constructors, closed-form translate powers, component knitting and
// classification, and the orbit-to-component map.

#include <map>
#include <string>
#include <vector>

#include "arcomp/gprj.hpp"
#include "json.hpp"

namespace arcomp::mono {

using gprj::Description;
using gprj::DimVec;
using gprj::Id;

class MonoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Form {
  Boundary0,   // (0 -> G)
  BoundaryDiag,// (G = G)
  BoundarySyz, // (Omega G -> P_G)
  ProjInjZero, // (0 -> P)
  ProjInjDiag, // (P = P)
  Generic      // knitted interior vertex
};

struct DimPair {
  DimVec sub, amb;
  bool operator==(const DimPair&) const = default;
};
DimPair dim_pair_add(const DimPair& a, const DimPair& b);
// componentwise difference; throws on a negative entry
DimPair dim_pair_sub(const DimPair& a, const DimPair& b);
bool dim_pair_is_zero(const DimPair& a);

struct Vertex {
  Form form = Form::Boundary0;
  Id base;        // boundary forms: g; proj-inj forms: p; generic: anchor family rep
  int level = 1;  // generic: quasi-length >= 2
  long power = 0; // generic: translate slot along the anchor orbit
  DimPair dims;

  std::string key() const; // identity (dims excluded)
  bool is_boundary() const;
  bool is_proj_inj() const;
  bool same_vertex(const Vertex& o) const { return key() == o.key(); }
};

std::string vertex_label(const Vertex& v);

// True iff the canonical sequence 0 -> Omega G -> P_G -> G -> 0 is
// already almost split: the mesh middle is all-projective and equals
// the projective cover, with translate = syzygy.
bool g_semisimple(const Description& d, const Id& g);

Vertex boundary0(const Description& d, const Id& g);
Vertex boundary_diag(const Description& d, const Id& g);
Vertex boundary_syz(const Description& d, const Id& g);
Vertex proj_inj_zero(const Description& d, const Id& p);
Vertex proj_inj_diag(const Description& d, const Id& p);

// Closed-form d-th translate of (0 -> g), any integer d.
Vertex tau_s_power_boundary(const Description& d, const Id& g, long power);
// Closed-form translate of an arbitrary boundary-form vertex.
Vertex tau_s_power_vertex(const Description& d, const Vertex& v, long power);

struct TauOrbit {
  std::vector<Vertex> orbit; // [tau^0, tau^1, ...]
  long period = 0;
};
TauOrbit tau_s_orbit(const Description& d, const Id& g);

struct Mesh {
  Vertex left;
  std::vector<Vertex> middle;
  Vertex right;
};

// The mesh ending at a boundary vertex, built from the underlying
// almost-split data with the splitting rules for the middle term.
// Errors on projective-injective (no mesh ends there) and generic
// vertices (use knitting).
Mesh almost_split_at(const Description& d, const Vertex& v);

struct ComponentQuiver {
  enum class Kind { OrientedCycle, DynkinQuotient, TubeTruncation, Unclassified };
  Kind kind = Kind::Unclassified;
  long mouth_period = 0;
  int depth = 0;

  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> arrows;  // multiset of (src, tgt)
  std::map<int, int> translation;           // vertex -> its translate
  struct MeshIdx {
    int left = -1;
    std::vector<int> middles;
    int right = -1;
  };
  std::vector<MeshIdx> meshes;

  int index_of(const std::string& key) const;
  std::size_t stable_count() const;
};

ComponentQuiver knit_component(const Description& d, const Id& g, int depth);

// Number of distinct translate orbits of the component that contain a
// boundary vertex. Requires a finite, fully knitted component.
int boundary_orbit_census(const ComponentQuiver& c);

// Canonical fingerprint of the component containing (0 -> g):
// for infinite components the sorted mouth orbit, for finite ones the
// sorted stable vertex set of the knit.
std::string component_fingerprint(const Description& d, const Id& g, int depth);

struct DeltaReport {
  struct Row {
    std::vector<Id> orbit;    // theta-orbit members
    std::string component_id; // fingerprint
    bool infinite = false;
  };
  std::vector<Row> rows;
  bool surjective = true; // by construction
  bool injective_on_infinite = true;
};
DeltaReport delta_map(const Description& d, int depth);

std::string to_dot(const ComponentQuiver& c, bool stable_only);
nlohmann::json component_to_json(const ComponentQuiver& c);

} // namespace arcomp::mono
