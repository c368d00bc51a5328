#include "arcomp/labels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "arcomp/monocat.hpp"

namespace arcomp::labels {

std::string to_string(const SimpleLabel& s) {
  std::ostringstream os;
  if (s.shift == 1) os << "\xce\xa9";      // Omega
  else if (s.shift == -1) os << "\xce\xa9^-1";
  else if (s.shift != 0) os << "\xce\xa9^" << s.shift;
  os << "S(" << s.base << ")";
  return os.str();
}

nlohmann::json to_json(const SimpleLabel& s) {
  return {{"shift", s.shift}, {"base", s.base}};
}

SimpleLabel normalize(const Description& d, int shift, const Id& base) {
  SimpleLabel s{shift, base};
  // Omega_A^3 S_G = S_{Omega G}: forced by composing the one-step rule
  // with itself against the stated two-step rule.
  while (s.shift >= 2) {
    s.shift -= 3;
    s.base = d.apply_syz(s.base, 1);
  }
  while (s.shift <= -2) {
    s.shift += 3;
    s.base = d.apply_syz(s.base, -1);
  }
  return s;
}

SimpleLabel omega_a(const Description& d, const SimpleLabel& s, long k) {
  return normalize(d, static_cast<int>(s.shift + k), s.base);
}

SimpleLabel tau_a(const Description& d, const SimpleLabel& s0, long j) {
  if (!d.has(s0.base)) throw LabelError("unknown base " + s0.base);
  if (d.is_projective(s0.base)) throw LabelError("simple label needs a non-projective base");
  SimpleLabel s = normalize(d, s0.shift, s0.base);
  if (j == 0) return s;
  if (mono::g_semisimple(d, s.base)) {
    if (j % 3 != 0)
      throw LabelError("translate of a simple at the semisimple-type module " + s.base +
                       " is defined only for multiples of three steps");
    s.base = gprj::theta_pow(d, s.base, j / 3);
    return s;
  }
  long n = j >= 0 ? j : -j;
  for (long i = 0; i < n; ++i) {
    if (j > 0)
      s = normalize(d, s.shift - 1, d.apply_tau(s.base, 1));
    else
      s = normalize(d, s.shift + 1, d.apply_tau(s.base, -1));
  }
  return s;
}

LabelOrbit tau_a_orbit(const Description& d, const SimpleLabel& s, long bound) {
  if (bound <= 0) bound = 6 * static_cast<long>(d.nonprojectives().size()) + 6;
  LabelOrbit out;
  SimpleLabel start = normalize(d, s.shift, s.base);
  out.orbit.push_back(start);
  SimpleLabel cur = start;
  for (long k = 1; k <= bound; ++k) {
    cur = tau_a(d, cur, 1);
    if (cur == start) {
      out.period = k;
      return out;
    }
    out.orbit.push_back(cur);
  }
  throw LabelError("translate orbit of " + to_string(s) + " did not close within bound");
}

// ---- preprojective type A specialization ----

static void check_range(int n, int i) {
  if (n < 2) throw LabelError("need n >= 2");
  if (i < 1 || i > n - 1) throw LabelError("index out of range: i = " + std::to_string(i));
}

std::vector<SimpleLabel> preprojective_tau_table(int n, int i) {
  check_range(n, i);
  Id Si = gprj::m_id(1, i);
  Id Sni = gprj::m_id(1, n - i);
  if (2 * i == n) return {{0, Si}, {-1, Si}, {1, Si}};
  return {{0, Si}, {-1, Si}, {1, Sni}, {0, Sni}, {-1, Sni}, {1, Si}};
}

long simple_component_count(int n) {
  if (n < 6)
    throw LabelError("component count needs n >= 6 (infinite representation type)");
  long formula = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
  auto d = gprj::nakayama_description(1, n);
  long orbits = static_cast<long>(gprj::theta_orbits(d).size());
  if (orbits != formula)
    throw LabelError("orbit count disagrees with the closed formula at n = " + std::to_string(n));
  return formula;
}

std::vector<SimpleLabel> tube_mouth(int n, int i) {
  if (n < 6) throw LabelError("tube mouth needs n >= 6");
  check_range(n, i);
  Id Si = gprj::m_id(1, i);
  Id Sni = gprj::m_id(1, n - i);
  if (2 * i == n) return {{1, Si}, {-1, Si}, {0, Si}};
  return {{1, Si}, {-1, Sni}, {0, Sni}, {1, Sni}, {-1, Si}, {0, Si}};
}

std::pair<TubeCoord, int> tube_translate(int n, int i, TubeCoord c, long j) {
  if (n < 6) throw LabelError("tube coordinates need n >= 6");
  check_range(n, i);
  long period = (2 * i == n) ? 3 : 6;
  TubeCoord out;
  out.m = c.m;
  out.r = ((c.r - 1 + j) % period + period) % period + 1;
  long jm = ((j % period) + period) % period;
  int shift;
  if (period == 6)
    shift = (jm == 5) ? 1 : static_cast<int>(-jm);
  else
    shift = (jm == 0) ? 0 : (jm == 1 ? -1 : 1);
  return {out, shift};
}

LambdaReport lambda_map(const Description& d, int depth) {
  LambdaReport rep;
  auto delta = mono::delta_map(d, depth);
  std::map<std::string, Id> components; // S-component id -> a representative base
  for (const auto& row : delta.rows)
    components.emplace(row.component_id, row.orbit.front());
  std::set<std::string> infinite_ids;
  for (const auto& [sid, r] : components) {
    LambdaReport::Row row;
    row.s_component = sid;
    if (mono::g_semisimple(d, r)) {
      row.collapsed = true;
      row.a_component = "(empty)";
    } else if (d.finite_type == gprj::FiniteType::Infinite) {
      row.infinite = true;
      auto orb = tau_a_orbit(d, SimpleLabel{0, r});
      std::vector<std::string> keys;
      for (const auto& l : orb.orbit) keys.push_back(to_string(l));
      std::sort(keys.begin(), keys.end());
      std::string id = "atube{";
      for (const auto& k : keys) id += k + ";";
      row.a_component = id + "}";
      if (!infinite_ids.insert(row.a_component).second) rep.injective_on_infinite = false;
    } else if (d.finite_type == gprj::FiniteType::Finite) {
      // remove the boundary-form vertices of the knitted component;
      // what is left is the A-component
      auto c = mono::knit_component(d, r, depth);
      std::vector<std::string> keys;
      for (const auto& v : c.vertices)
        if (!v.is_proj_inj() && !v.is_boundary()) keys.push_back(v.key());
      std::sort(keys.begin(), keys.end());
      std::string id = "acomp{";
      for (const auto& k : keys) id += k + ";";
      row.a_component = id + "}";
    } else {
      auto orb = tau_a_orbit(d, SimpleLabel{0, r});
      std::vector<std::string> keys;
      for (const auto& l : orb.orbit) keys.push_back(to_string(l));
      std::sort(keys.begin(), keys.end());
      std::string id = "aorbit{";
      for (const auto& k : keys) id += k + ";";
      row.a_component = id + "}?";
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace arcomp::labels
