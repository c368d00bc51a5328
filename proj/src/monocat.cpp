#include "arcomp/monocat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace arcomp::mono {

DimPair dim_pair_add(const DimPair& a, const DimPair& b) {
  DimPair r = a;
  if (r.sub.size() < b.sub.size()) r.sub.resize(b.sub.size(), 0);
  if (r.amb.size() < b.amb.size()) r.amb.resize(b.amb.size(), 0);
  for (std::size_t i = 0; i < b.sub.size(); ++i) r.sub[i] += b.sub[i];
  for (std::size_t i = 0; i < b.amb.size(); ++i) r.amb[i] += b.amb[i];
  return r;
}

DimPair dim_pair_sub(const DimPair& a, const DimPair& b) {
  DimPair r = a;
  for (std::size_t i = 0; i < b.sub.size(); ++i) {
    r.sub[i] -= b.sub[i];
    if (r.sub[i] < 0) throw MonoError("negative dimension in mesh bookkeeping");
  }
  for (std::size_t i = 0; i < b.amb.size(); ++i) {
    r.amb[i] -= b.amb[i];
    if (r.amb[i] < 0) throw MonoError("negative dimension in mesh bookkeeping");
  }
  return r;
}

bool dim_pair_is_zero(const DimPair& a) {
  auto z = [](const DimVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  };
  return z(a.sub) && z(a.amb);
}

std::string Vertex::key() const {
  std::ostringstream os;
  switch (form) {
    case Form::Boundary0: os << "0|" << base; break;
    case Form::BoundaryDiag: os << "D|" << base; break;
    case Form::BoundarySyz: os << "S|" << base; break;
    case Form::ProjInjZero: os << "PZ|" << base; break;
    case Form::ProjInjDiag: os << "PD|" << base; break;
    case Form::Generic: os << "g|" << base << "|" << level << "|" << power; break;
  }
  return os.str();
}

bool Vertex::is_boundary() const {
  return form == Form::Boundary0 || form == Form::BoundaryDiag || form == Form::BoundarySyz;
}

bool Vertex::is_proj_inj() const {
  return form == Form::ProjInjZero || form == Form::ProjInjDiag;
}

std::string vertex_label(const Vertex& v) {
  switch (v.form) {
    case Form::Boundary0: return "0" + v.base;
    case Form::BoundaryDiag: return v.base + "=" + v.base;
    case Form::BoundarySyz: return "\xce\xa9" + v.base + "|P"; // Omega
    case Form::ProjInjZero: return "0" + v.base;
    case Form::ProjInjDiag: return v.base + "=" + v.base;
    case Form::Generic: {
      std::ostringstream os;
      os << "gen(" << v.base << "," << v.power << ")";
      if (v.level != 2) os << "@" << v.level;
      return os.str();
    }
  }
  return "?";
}

static DimVec zero_like(const DimVec& v) { return DimVec(v.size(), 0); }

static DimVec dim_of_multiset(const Description& d, const std::vector<Id>& ids) {
  DimVec s;
  for (const auto& id : ids) {
    const DimVec& v = d.dim(id);
    if (s.empty()) s.assign(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) s[i] += v[i];
  }
  return s;
}

static void require_nonprojective(const Description& d, const Id& g, const char* what) {
  if (!d.has(g)) throw MonoError(std::string(what) + ": unknown id " + g);
  if (d.is_projective(g))
    throw MonoError(std::string(what) + ": " + g + " is projective");
}

bool g_semisimple(const Description& d, const Id& g) {
  require_nonprojective(d, g, "g_semisimple");
  const auto& mid = d.ar_middle.at(g);
  for (const auto& x : mid)
    if (!d.is_projective(x)) return false;
  auto sorted = [](std::vector<Id> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(mid) != sorted(d.proj_cover.at(g))) return false;
  return d.tau.at(g) == d.syz.at(g);
}

Vertex boundary0(const Description& d, const Id& g) {
  require_nonprojective(d, g, "boundary vertex (0->G)");
  Vertex v;
  v.form = Form::Boundary0;
  v.base = g;
  v.dims = {zero_like(d.dim(g)), d.dim(g)};
  return v;
}

Vertex boundary_diag(const Description& d, const Id& g) {
  require_nonprojective(d, g, "boundary vertex (G=G)");
  Vertex v;
  v.form = Form::BoundaryDiag;
  v.base = g;
  v.dims = {d.dim(g), d.dim(g)};
  return v;
}

Vertex boundary_syz(const Description& d, const Id& g) {
  require_nonprojective(d, g, "boundary vertex (Omega G -> P_G)");
  Vertex v;
  v.form = Form::BoundarySyz;
  v.base = g;
  v.dims = {d.dim(d.syz.at(g)), dim_of_multiset(d, d.proj_cover.at(g))};
  return v;
}

Vertex proj_inj_zero(const Description& d, const Id& p) {
  if (!d.is_projective(p)) throw MonoError("(0->P) requires projective P, got " + p);
  Vertex v;
  v.form = Form::ProjInjZero;
  v.base = p;
  v.dims = {zero_like(d.dim(p)), d.dim(p)};
  return v;
}

Vertex proj_inj_diag(const Description& d, const Id& p) {
  if (!d.is_projective(p)) throw MonoError("(P=P) requires projective P, got " + p);
  Vertex v;
  v.form = Form::ProjInjDiag;
  v.base = p;
  v.dims = {d.dim(p), d.dim(p)};
  return v;
}

// ---- closed-form translate powers ----

Vertex tau_s_power_boundary(const Description& d, const Id& g, long power) {
  require_nonprojective(d, g, "translate power");
  if (power >= 0) {
    long m = power / 3, k = power % 3;
    Id b = gprj::theta_pow(d, g, m);
    if (k == 0) return boundary0(d, b);
    if (k == 1) return boundary_diag(d, d.apply_tau(b, 1));
    return boundary_syz(d, d.apply_syz(d.apply_tau(b, 2), -1));
  }
  long e = -power;
  long m = e / 3, k = e % 3;
  Id b = gprj::theta_pow(d, g, -m);
  if (k == 0) return boundary0(d, b);
  if (k == 1) return boundary_syz(d, d.apply_tau(b, -1));
  return boundary_diag(d, d.apply_tau(d.apply_syz(d.apply_tau(b, -1), 1), -1));
}

// Normalize any boundary form to ((0 -> A), offset): (G=G) is the
// first translate of (0 -> tau^{-1} G), and (Omega G -> P_G) the second
// translate of (0 -> tau^{-2} Omega G).
static std::pair<Id, long> boundary_normal_form(const Description& d, const Vertex& v) {
  switch (v.form) {
    case Form::Boundary0: return {v.base, 0};
    case Form::BoundaryDiag: return {d.apply_tau(v.base, -1), 1};
    case Form::BoundarySyz: return {d.apply_tau(d.apply_syz(v.base, 1), -2), 2};
    default: throw MonoError("translate power undefined on non-boundary vertex " + v.key());
  }
}

Vertex tau_s_power_vertex(const Description& d, const Vertex& v, long power) {
  auto [a, off] = boundary_normal_form(d, v);
  return tau_s_power_boundary(d, a, power + off);
}

TauOrbit tau_s_orbit(const Description& d, const Id& g) {
  require_nonprojective(d, g, "tau_s_orbit");
  TauOrbit out;
  Vertex start = boundary0(d, g);
  long bound = 3 * static_cast<long>(d.nonprojectives().size()) + 3;
  out.orbit.push_back(start);
  for (long k = 1; k <= bound; ++k) {
    Vertex v = tau_s_power_boundary(d, g, k);
    if (v.same_vertex(start)) {
      out.period = k;
      return out;
    }
    out.orbit.push_back(v);
  }
  throw MonoError("translate orbit of (0->" + g + ") did not close within bound");
}

// ---- mesh construction ----

// Anchor for interior vertices produced by the meshes along the orbit
// of (0 -> g): the orbit representative plus the slot of the mesh.
static Vertex generic_vertex(const Description& d, const Id& anchor_base, long slot,
                             long anchor_period, DimPair dims) {
  Vertex v;
  v.form = Form::Generic;
  v.base = gprj::theta_orbit_rep(d, anchor_base);
  v.level = 2;
  // slot measured from the representative's (0 -> rep) mesh
  const auto orb = gprj::theta_orbit_of(d, anchor_base);
  long idx = 0;
  for (std::size_t i = 0; i < orb.members.size(); ++i)
    if (orb.members[i] == anchor_base) idx = static_cast<long>(i);
  v.power = (3 * idx + slot) % anchor_period;
  v.dims = std::move(dims);
  return v;
}

Mesh almost_split_at(const Description& d, const Vertex& v) {
  if (v.is_proj_inj())
    throw MonoError("no almost split sequence ends at the projective-injective vertex " + v.key());
  if (v.form == Form::Generic)
    throw MonoError("almost_split_at expects a boundary vertex; use knitting for interior vertices");

  Mesh mesh;
  mesh.right = v;

  if (v.form == Form::Boundary0) {
    // ending at (0 -> C): (tauC = tauC) -> (tauC -> B) -> (0 -> C)
    const Id& C = v.base;
    Id A = d.tau.at(C);
    mesh.left = boundary_diag(d, A);
    DimPair mid{d.dim(A), dim_of_multiset(d, d.ar_middle.at(C))};
    if (g_semisimple(d, C)) {
      Vertex m = boundary_syz(d, C);
      if (!(m.dims == mid)) throw MonoError("semisimple mesh shape mismatch at " + C);
      mesh.middle.push_back(std::move(m));
    } else {
      long period = 3 * static_cast<long>(gprj::theta_orbit_of(d, C).members.size());
      mesh.middle.push_back(generic_vertex(d, C, 0, period, mid));
    }
    return mesh;
  }

  if (v.form == Form::BoundaryDiag) {
    // ending at (C=C): (A -> I_A) -> (B -> I_A + C) -> (C=C), A = tauC;
    // the middle splits off (Q=Q) exactly at the sinks recorded for Q.
    const Id& C = v.base;
    Id A = d.tau.at(C);
    mesh.left = boundary_syz(d, d.apply_syz(A, -1));
    DimPair total = dim_pair_add(mesh.left.dims, v.dims);
    std::vector<Vertex> pis;
    for (const auto& [q, refs] : d.rad_mono_approx)
      for (const auto& r : refs) {
        bool match = (r.form == 'a' && mesh.left.form == Form::Boundary0 && mesh.left.base == r.base) ||
                     (r.form == 'b' && mesh.left.form == Form::BoundaryDiag && mesh.left.base == r.base) ||
                     (r.form == 'c' && mesh.left.form == Form::BoundarySyz && mesh.left.base == r.base);
        if (match) pis.push_back(proj_inj_diag(d, q));
      }
    DimPair stable = total;
    for (const auto& q : pis) stable = dim_pair_sub(stable, q.dims);
    if (g_semisimple(d, C)) {
      Vertex m = boundary0(d, C);
      if (!(m.dims == stable)) throw MonoError("semisimple mesh shape mismatch at (C=C), C=" + C);
      mesh.middle.push_back(std::move(m));
    } else {
      Id u = d.apply_tau(C, -1); // (C=C) is the first translate of (0 -> u)
      long period = 3 * static_cast<long>(gprj::theta_orbit_of(d, u).members.size());
      mesh.middle.push_back(generic_vertex(d, u, 1, period, stable));
    }
    for (auto& q : pis) mesh.middle.push_back(std::move(q));
    return mesh;
  }

  // ending at (Omega C -> P_C): (0 -> A) -> (Omega C -> A + P_C) -> (Omega C -> P_C)
  const Id& C = v.base;
  Id A = d.tau.at(C);
  mesh.left = boundary0(d, A);
  DimPair total = dim_pair_add(mesh.left.dims, v.dims);
  std::vector<Vertex> pis;
  {
    Id tg = d.apply_tau(C, 1);
    for (const auto& [q, us] : d.rad_approx)
      for (const auto& u : us)
        if (u == tg) pis.push_back(proj_inj_zero(d, q));
  }
  DimPair stable = total;
  for (const auto& q : pis) stable = dim_pair_sub(stable, q.dims);
  if (g_semisimple(d, C)) {
    Vertex m = boundary_diag(d, A);
    if (!(m.dims == stable)) throw MonoError("semisimple mesh shape mismatch at (OmegaC->P), C=" + C);
    mesh.middle.push_back(std::move(m));
  } else {
    Id u = d.apply_tau(d.apply_syz(C, 1), -2); // second translate of (0 -> u)
    long period = 3 * static_cast<long>(gprj::theta_orbit_of(d, u).members.size());
    mesh.middle.push_back(generic_vertex(d, u, 2, period, stable));
  }
  for (auto& q : pis) mesh.middle.push_back(std::move(q));
  return mesh;
}

int ComponentQuiver::index_of(const std::string& key) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].key() == key) return static_cast<int>(i);
  return -1;
}

std::size_t ComponentQuiver::stable_count() const {
  std::size_t n = 0;
  for (const auto& v : vertices)
    if (!v.is_proj_inj()) ++n;
  return n;
}

int boundary_orbit_census(const ComponentQuiver& c) {
  if (c.kind != ComponentQuiver::Kind::OrientedCycle &&
      c.kind != ComponentQuiver::Kind::DynkinQuotient)
    throw MonoError("boundary orbit census requires a finite, fully knitted component");
  // union vertices along the translation
  std::vector<int> parent(c.vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : c.translation) parent[find(a)] = find(b);
  std::set<int> with_boundary;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (c.vertices[i].is_boundary()) with_boundary.insert(find(static_cast<int>(i)));
  return static_cast<int>(with_boundary.size());
}

} // namespace arcomp::mono
