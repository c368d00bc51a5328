#include "arcomp/gprj.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arcomp::gprj {

bool Description::has(const Id& g) const {
  return std::any_of(objects.begin(), objects.end(),
                     [&](const IndecObj& o) { return o.id == g; });
}

const IndecObj& Description::obj(const Id& g) const {
  for (const auto& o : objects)
    if (o.id == g) return o;
  throw DescriptionError("unknown object id: " + g);
}

bool Description::is_projective(const Id& g) const { return obj(g).projective; }

const DimVec& Description::dim(const Id& g) const { return obj(g).dim; }

std::vector<Id> Description::nonprojectives() const {
  std::vector<Id> out;
  for (const auto& o : objects)
    if (!o.projective) out.push_back(o.id);
  return out;
}

std::vector<Id> Description::projectives() const {
  std::vector<Id> out;
  for (const auto& o : objects)
    if (o.projective) out.push_back(o.id);
  return out;
}

static Id map_at(const std::map<Id, Id>& m, const Id& g, const char* what) {
  auto it = m.find(g);
  if (it == m.end()) throw DescriptionError(std::string(what) + " undefined at " + g);
  return it->second;
}

Id Description::apply_tau(const Id& g, long k) const {
  Id cur = g;
  for (long i = 0; i < (k >= 0 ? k : -k); ++i)
    cur = map_at(k >= 0 ? tau : tau_inv, cur, "tau");
  return cur;
}

Id Description::apply_syz(const Id& g, long k) const {
  Id cur = g;
  for (long i = 0; i < (k >= 0 ? k : -k); ++i)
    cur = map_at(k >= 0 ? syz : cosyz, cur, "syzygy");
  return cur;
}

static DimVec dim_sum(const Description& d, const std::vector<Id>& ids) {
  if (ids.empty()) return {};
  DimVec s(d.objects.front().dim.size(), 0);
  for (const auto& id : ids) {
    const DimVec& v = d.dim(id);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += v[i];
  }
  return s;
}

void Description::validate() const {
  if (objects.empty()) throw DescriptionError("empty description");
  std::set<Id> ids;
  std::size_t nvert = objects.front().dim.size();
  for (const auto& o : objects) {
    if (!ids.insert(o.id).second) throw DescriptionError("duplicate id: " + o.id);
    if (o.dim.size() != nvert) throw DescriptionError("dim vector length mismatch at " + o.id);
    bool nonzero = false;
    for (int x : o.dim) {
      if (x < 0) throw DescriptionError("negative dim entry at " + o.id);
      if (x > 0) nonzero = true;
    }
    if (!nonzero) throw DescriptionError("zero dim vector at " + o.id);
  }
  auto nonproj = nonprojectives();
  auto check_bijection = [&](const std::map<Id, Id>& f, const std::map<Id, Id>& finv,
                             const char* what) {
    std::set<Id> image;
    for (const auto& g : nonproj) {
      auto it = f.find(g);
      if (it == f.end()) throw DescriptionError(std::string("missing ") + what + " entry at " + g);
      if (is_projective(it->second))
        throw DescriptionError(std::string(what) + " image of " + g + " is projective");
      if (!image.insert(it->second).second)
        throw DescriptionError(std::string(what) + " is not injective (at " + g + ")");
      auto back = finv.find(it->second);
      if (back == finv.end() || back->second != g)
        throw DescriptionError(std::string(what) + " inverse mismatch at " + g);
    }
  };
  check_bijection(tau, tau_inv, "tau");
  check_bijection(tau_inv, tau, "tau_inv");
  check_bijection(syz, cosyz, "syzygy");
  check_bijection(cosyz, syz, "cosyzygy");
  for (const auto& g : nonproj) {
    auto pc = proj_cover.find(g);
    if (pc == proj_cover.end() || pc->second.empty())
      throw DescriptionError("missing proj_cover at " + g);
    for (const auto& p : pc->second)
      if (!is_projective(p)) throw DescriptionError("proj_cover of " + g + " contains non-projective " + p);
    auto la = left_approx.find(g);
    if (la == left_approx.end() || la->second.empty())
      throw DescriptionError("missing left_approx at " + g);
    for (const auto& p : la->second)
      if (!is_projective(p)) throw DescriptionError("left_approx of " + g + " contains non-projective " + p);
    auto mid = ar_middle.find(g);
    if (mid == ar_middle.end()) throw DescriptionError("missing ar_middle at " + g);
    for (const auto& x : mid->second) obj(x);
    DimVec lhs = dim(map_at(tau, g, "tau"));
    const DimVec& dg = dim(g);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += dg[i];
    DimVec rhs = dim_sum(*this, mid->second);
    if (rhs.empty()) rhs.assign(lhs.size(), 0);
    if (lhs != rhs) throw DescriptionError("ar_middle dim additivity fails at " + g);
  }
  for (const auto& [p, v] : rad_approx) {
    if (!is_projective(p)) throw DescriptionError("rad_approx key not projective: " + p);
    for (const auto& u : v)
      if (is_projective(u)) throw DescriptionError("rad_approx summand projective: " + u);
  }
  for (const auto& [p, v] : rad_mono_approx) {
    if (!is_projective(p)) throw DescriptionError("rad_mono_approx key not projective: " + p);
    for (const auto& r : v) {
      if (r.form != 'a' && r.form != 'b' && r.form != 'c')
        throw DescriptionError("rad_mono_approx bad form tag");
      if (is_projective(r.base)) throw DescriptionError("rad_mono_approx base projective: " + r.base);
    }
  }
}

// ---- Nakayama built-ins ----

Id m_id(int v, int t) {
  std::ostringstream os;
  os << "M(" << v << "," << t << ")";
  return os.str();
}

std::pair<int, int> parse_m_id(const Id& id) {
  int v = 0, t = 0;
  if (std::sscanf(id.c_str(), "M(%d,%d)", &v, &t) != 2)
    throw DescriptionError("not an M(v,t) id: " + id);
  return {v, t};
}

static int wrap(int v, int m) {
  int r = v % m;
  if (r <= 0) r += m;
  return r;
}

Description nakayama_description(int m, int l) {
  if (m < 1) throw DescriptionError("nakayama: vertex count must be >= 1");
  if (l < 2) throw DescriptionError("nakayama: Loewy length must be >= 2 (no non-projective modules otherwise)");
  Description d;
  {
    std::ostringstream os;
    os << "N(" << m << "," << l << ")";
    d.name = os.str();
  }
  for (int v = 1; v <= m; ++v)
    for (int t = 1; t <= l; ++t) {
      IndecObj o;
      o.id = m_id(v, t);
      o.projective = (t == l);
      o.dim.assign(static_cast<std::size_t>(m), 0);
      // composition factors v, v-1, ..., v-t+1 (mod m)
      for (int j = 0; j < t; ++j) o.dim[static_cast<std::size_t>(wrap(v - j, m) - 1)] += 1;
      d.objects.push_back(std::move(o));
    }
  for (int v = 1; v <= m; ++v)
    for (int t = 1; t < l; ++t) {
      Id g = m_id(v, t);
      d.tau[g] = m_id(wrap(v - 1, m), t);
      d.tau_inv[g] = m_id(wrap(v + 1, m), t);
      d.syz[g] = m_id(wrap(v - t, m), l - t);
      d.cosyz[g] = m_id(wrap(v + l - t, m), l - t);
      d.proj_cover[g] = {m_id(v, l)};
      d.left_approx[g] = {m_id(wrap(v + l - t, m), l)};
      std::vector<Id> mid{m_id(v, t + 1)};
      if (t >= 2) mid.push_back(m_id(wrap(v - 1, m), t - 1));
      d.ar_middle[g] = std::move(mid);
    }
  for (int v = 1; v <= m; ++v) {
    Id p = m_id(v, l);
    d.rad_approx[p] = {m_id(wrap(v - 1, m), l - 1)};
    d.rad_mono_approx[p] = {BoundaryRef{'c', m_id(v, 1)}};
  }
  if (m == 1)
    d.finite_type = (l <= 5) ? FiniteType::Finite : FiniteType::Infinite;
  else
    d.finite_type = FiniteType::Unknown;
  d.validate();
  return d;
}

// ---- theta calculus ----

Id theta(const Description& d, const Id& g) {
  if (d.is_projective(g)) throw DescriptionError("theta undefined at projective " + g);
  Id r1 = d.apply_tau(d.apply_syz(d.apply_tau(g, 2), -1), 1);
  Id r2 = d.apply_syz(d.apply_tau(g, 3), -1);
  Id r3 = d.apply_tau(d.apply_syz(g, -1), 3);
  if (r1 != r2 || r1 != r3)
    throw DescriptionError("theta factorizations disagree at " + g +
                           " (" + r1 + ", " + r2 + ", " + r3 + ")");
  return r1;
}

Id theta_inv(const Description& d, const Id& g) {
  if (d.is_projective(g)) throw DescriptionError("theta_inv undefined at projective " + g);
  Id r1 = d.apply_tau(d.apply_syz(d.apply_tau(g, -1), 1), -2);
  Id r2 = d.apply_syz(d.apply_tau(g, -3), 1);
  if (r1 != r2) throw DescriptionError("theta_inv factorizations disagree at " + g);
  return r1;
}

Id theta_pow(const Description& d, const Id& g, long k) {
  Id cur = g;
  for (long i = 0; i < (k >= 0 ? k : -k); ++i)
    cur = (k >= 0) ? theta(d, cur) : theta_inv(d, cur);
  return cur;
}

ThetaOrbit theta_orbit_of(const Description& d, const Id& g) {
  std::vector<Id> cyc{g};
  Id cur = theta(d, g);
  while (cur != g) {
    cyc.push_back(cur);
    cur = theta(d, cur);
    if (cyc.size() > d.objects.size())
      throw DescriptionError("theta orbit does not close at " + g);
  }
  auto mn = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), mn, cyc.end());
  return ThetaOrbit{std::move(cyc)};
}

Id theta_orbit_rep(const Description& d, const Id& g) {
  return theta_orbit_of(d, g).members.front();
}

std::vector<ThetaOrbit> theta_orbits(const Description& d) {
  std::vector<Id> pending = d.nonprojectives();
  std::sort(pending.begin(), pending.end());
  std::set<Id> seen;
  std::vector<ThetaOrbit> orbits;
  for (const auto& g : pending) {
    if (seen.count(g)) continue;
    ThetaOrbit o = theta_orbit_of(d, g);
    for (const auto& x : o.members) seen.insert(x);
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(), [](const ThetaOrbit& a, const ThetaOrbit& b) {
    return a.members.front() < b.members.front();
  });
  return orbits;
}

// ---- JSON serialization ----

static FiniteType finite_type_from_string(const std::string& s) {
  if (s == "finite") return FiniteType::Finite;
  if (s == "infinite") return FiniteType::Infinite;
  if (s == "unknown") return FiniteType::Unknown;
  throw DescriptionError("bad finite_type value: " + s);
}

static std::string finite_type_to_string(FiniteType f) {
  switch (f) {
    case FiniteType::Finite: return "finite";
    case FiniteType::Infinite: return "infinite";
    default: return "unknown";
  }
}

Description description_from_json(const nlohmann::json& doc) {
  Description d;
  try {
    d.name = doc.value("name", "table");
    for (const auto& o : doc.at("objects")) {
      IndecObj x;
      x.id = o.at("id").get<std::string>();
      x.projective = o.value("projective", false);
      x.dim = o.at("dim").get<DimVec>();
      d.objects.push_back(std::move(x));
    }
    auto read_map = [&](const char* key, std::map<Id, Id>& out) {
      for (const auto& [k, v] : doc.at(key).items()) out[k] = v.get<std::string>();
    };
    auto read_multi = [&](const char* key, std::map<Id, std::vector<Id>>& out) {
      for (const auto& [k, v] : doc.at(key).items()) out[k] = v.get<std::vector<Id>>();
    };
    read_map("tau", d.tau);
    read_map("syzygy", d.syz);
    read_multi("proj_cover", d.proj_cover);
    read_multi("left_approx", d.left_approx);
    read_multi("ar_middle", d.ar_middle);
    d.finite_type = finite_type_from_string(doc.value("finite_type", "unknown"));
    if (doc.contains("rad_approx"))
      for (const auto& [k, v] : doc.at("rad_approx").items())
        d.rad_approx[k] = v.get<std::vector<Id>>();
    if (doc.contains("rad_mono_approx"))
      for (const auto& [k, v] : doc.at("rad_mono_approx").items())
        for (const auto& r : v)
          d.rad_mono_approx[k].push_back(
              BoundaryRef{r.at("form").get<std::string>().at(0), r.at("base").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    throw DescriptionError(std::string("malformed description document: ") + e.what());
  }
  // invert tau and syzygy
  for (const auto& [k, v] : d.tau) d.tau_inv[v] = k;
  for (const auto& [k, v] : d.syz) d.cosyz[v] = k;
  d.validate();
  return d;
}

Description description_from_string(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  return description_from_json(doc);
}

nlohmann::json description_to_json(const Description& d) {
  nlohmann::json doc;
  doc["name"] = d.name;
  doc["objects"] = nlohmann::json::array();
  for (const auto& o : d.objects)
    doc["objects"].push_back({{"id", o.id}, {"projective", o.projective}, {"dim", o.dim}});
  auto put_map = [&](const char* key, const std::map<Id, Id>& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : m) j[k] = v;
    doc[key] = std::move(j);
  };
  auto put_multi = [&](const char* key, const std::map<Id, std::vector<Id>>& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : m) j[k] = v;
    doc[key] = std::move(j);
  };
  put_map("tau", d.tau);
  put_map("syzygy", d.syz);
  put_multi("proj_cover", d.proj_cover);
  put_multi("left_approx", d.left_approx);
  put_multi("ar_middle", d.ar_middle);
  doc["finite_type"] = finite_type_to_string(d.finite_type);
  if (!d.rad_approx.empty()) put_multi("rad_approx", d.rad_approx);
  if (!d.rad_mono_approx.empty()) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : d.rad_mono_approx) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : v)
        arr.push_back({{"form", std::string(1, r.form)}, {"base", r.base}});
      j[k] = std::move(arr);
    }
    doc["rad_mono_approx"] = std::move(j);
  }
  return doc;
}

const std::string& t2_kx2_table_text() {
  static const std::string text = R"JSON({
  "name": "Gprj-T2(k[x]/(x^2))",
  "objects": [
    {"id": "G",  "projective": false, "dim": [0, 1]},
    {"id": "H",  "projective": false, "dim": [1, 1]},
    {"id": "K",  "projective": false, "dim": [1, 2]},
    {"id": "PZ", "projective": true,  "dim": [0, 2]},
    {"id": "PD", "projective": true,  "dim": [2, 2]}
  ],
  "tau":    {"G": "H", "H": "K", "K": "G"},
  "syzygy": {"G": "G", "H": "H", "K": "K"},
  "proj_cover":  {"G": ["PZ"], "H": ["PD"], "K": ["PD", "PZ"]},
  "left_approx": {"G": ["PZ"], "H": ["PD"], "K": ["PD", "PZ"]},
  "ar_middle":   {"G": ["K"], "H": ["G", "PD"], "K": ["H", "PZ"]},
  "finite_type": "finite",
  "rad_approx": {"PZ": ["G"], "PD": ["K"]},
  "rad_mono_approx": {"PZ": [{"form": "c", "base": "G"}], "PD": [{"form": "c", "base": "K"}]}
})JSON";
  return text;
}

Description t2_kx2_description() { return description_from_string(t2_kx2_table_text()); }

} // namespace arcomp::gprj
