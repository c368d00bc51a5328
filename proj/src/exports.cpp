#include <sstream>

#include "arcomp/monocat.hpp"

namespace arcomp::mono {

static const char* form_name(Form f) {
  switch (f) {
    case Form::Boundary0: return "boundary0";
    case Form::BoundaryDiag: return "boundary_diag";
    case Form::BoundarySyz: return "boundary_syz";
    case Form::ProjInjZero: return "proj_inj_zero";
    case Form::ProjInjDiag: return "proj_inj_diag";
    case Form::Generic: return "generic";
  }
  return "?";
}

static const char* kind_name(ComponentQuiver::Kind k) {
  switch (k) {
    case ComponentQuiver::Kind::OrientedCycle: return "oriented_cycle";
    case ComponentQuiver::Kind::DynkinQuotient: return "dynkin_quotient";
    case ComponentQuiver::Kind::TubeTruncation: return "tube_truncation";
    case ComponentQuiver::Kind::Unclassified: return "unclassified";
  }
  return "?";
}

std::string to_dot(const ComponentQuiver& c, bool stable_only) {
  std::ostringstream os;
  os << "digraph component {\n  rankdir=LR;\n  node [shape=box];\n";
  std::vector<bool> keep(c.vertices.size(), true);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const Vertex& v = c.vertices[i];
    if (stable_only && v.is_proj_inj()) {
      keep[i] = false;
      continue;
    }
    os << "  v" << i << " [label=\"" << vertex_label(v) << "\"";
    if (v.is_proj_inj()) os << " peripheries=2";
    os << "];\n";
  }
  for (const auto& [a, b] : c.arrows) {
    if (!keep[static_cast<std::size_t>(a)] || !keep[static_cast<std::size_t>(b)]) continue;
    os << "  v" << a << " -> v" << b << ";\n";
  }
  for (const auto& [v, t] : c.translation) {
    if (!keep[static_cast<std::size_t>(v)] || !keep[static_cast<std::size_t>(t)]) continue;
    os << "  v" << v << " -> v" << t << " [style=dashed, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json component_to_json(const ComponentQuiver& c) {
  nlohmann::json j;
  j["verdict"] = kind_name(c.kind);
  j["mouth_period"] = c.mouth_period;
  j["depth"] = c.depth;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : c.vertices) {
    nlohmann::json jv;
    jv["form"] = form_name(v.form);
    jv["base"] = v.base;
    if (v.form == Form::Generic) {
      jv["level"] = v.level;
      jv["power"] = v.power;
    }
    jv["label"] = vertex_label(v);
    jv["dims"] = {v.dims.sub, v.dims.amb};
    j["vertices"].push_back(std::move(jv));
  }
  j["arrows"] = nlohmann::json::array();
  for (const auto& [a, b] : c.arrows) j["arrows"].push_back({a, b});
  j["translation"] = nlohmann::json::object();
  for (const auto& [v, t] : c.translation) j["translation"][std::to_string(v)] = t;
  j["meshes"] = nlohmann::json::array();
  for (const auto& m : c.meshes)
    j["meshes"].push_back({{"left", m.left}, {"middles", m.middles}, {"right", m.right}});
  return j;
}

} // namespace arcomp::mono
