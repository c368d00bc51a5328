// arcomp: stable Auslander-Reiten components of monomorphism categories
// over finite Gorenstein-projective descriptions, with an exact linear
// algebra certification suite.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcomp/certify.hpp"
#include "arcomp/gprj.hpp"
#include "arcomp/labels.hpp"
#include "arcomp/monocat.hpp"

namespace {

using arcomp::gprj::Description;

struct CommonOpts {
  int naka_m = 0, naka_l = 0;
  std::string table_file;
  std::string format = "table";
  std::string out_file;
  int depth = 6;
  unsigned long long prime = 101;
  unsigned long long seed = 0;
};

void add_source_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--nakayama", [&o](const std::vector<std::string>& vals) {
        if (vals.size() != 2) return false;
        o.naka_m = std::stoi(vals[0]);
        o.naka_l = std::stoi(vals[1]);
        return true;
      }, "self-injective Nakayama algebra N(M, L)")
      ->expected(2);
  cmd->add_option("--table", o.table_file, "JSON description table");
}

Description load_description(const CommonOpts& o) {
  if (o.naka_m > 0) return arcomp::gprj::nakayama_description(o.naka_m, o.naka_l);
  if (!o.table_file.empty()) {
    std::ifstream in(o.table_file);
    if (!in) throw arcomp::gprj::DescriptionError("cannot open table file " + o.table_file);
    nlohmann::json doc = nlohmann::json::parse(in);
    return arcomp::gprj::description_from_json(doc);
  }
  throw arcomp::gprj::DescriptionError("either --nakayama M L or --table FILE is required");
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_file);
  out << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable components of monomorphism categories"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string start_id;
  int pp_n = 0, pp_i = 0;
  long steps = 6;
  int shift = 0;
  bool stable_only = false;
  std::string claim;
  int n_lo = 3, n_hi = 5;

  auto* orbits = app.add_subcommand("theta-orbits", "orbit partition of the auto-equivalence");
  add_source_opts(orbits, o);
  orbits->add_option("--format", o.format, "table|json");

  auto* torb = app.add_subcommand("tau-orbit", "translate orbit of a boundary vertex");
  add_source_opts(torb, o);
  torb->add_option("--start", start_id, "object id")->required();
  torb->add_option("--format", o.format, "table|json");

  auto* comp = app.add_subcommand("component", "knit the component of a boundary vertex");
  add_source_opts(comp, o);
  comp->add_option("--start", start_id, "object id")->required();
  comp->add_option("--depth", o.depth, "tube truncation depth (default 6)");
  comp->add_option("--format", o.format, "table|json|dot");
  comp->add_flag("--stable", stable_only, "omit projective-injective vertices");
  comp->add_option("--out", o.out_file, "write output to a file");

  auto* tsimple = app.add_subcommand("tau-simple", "translate orbit of a simple label");
  add_source_opts(tsimple, o);
  tsimple->add_option("--preprojective", pp_n, "type A preprojective algebra index n");
  tsimple->add_option("--i", pp_i, "simple index");
  tsimple->add_option("--base", start_id, "base object id (with --nakayama/--table)");
  tsimple->add_option("--shift", shift, "initial syzygy shift");
  tsimple->add_option("--steps", steps, "number of translate steps");
  tsimple->add_option("--format", o.format, "table|json");

  auto* mouth = app.add_subcommand("mouth", "tube mouth labels");
  mouth->add_option("--preprojective", pp_n, "index n")->required();
  mouth->add_option("--i", pp_i, "simple index")->required();
  mouth->add_option("--format", o.format, "table|json");

  auto* count = app.add_subcommand("count-components", "simple-bearing component count");
  count->add_option("--preprojective", pp_n, "index n")->required();

  auto* cert = app.add_subcommand("certify", "run an oracle certification claim");
  cert->add_option("--claim", claim, "claim name (or 'all')")->required();
  cert->add_option("--n-lo", n_lo, "lower bound of the parameter range");
  cert->add_option("--n-hi", n_hi, "upper bound of the parameter range");
  cert->add_option("--prime", o.prime, "field characteristic (default 101)");
  cert->add_option("--seed", o.seed, "random seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (orbits->parsed()) {
      Description d = load_description(o);
      auto os = arcomp::gprj::theta_orbits(d);
      if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& orb : os) j.push_back(orb.members);
        emit(o, j.dump(2) + "\n");
      } else {
        std::string text;
        for (const auto& orb : os) {
          text += "{";
          for (std::size_t i = 0; i < orb.members.size(); ++i)
            text += (i ? ", " : "") + orb.members[i];
          text += "}\n";
        }
        emit(o, text);
      }
      return 0;
    }
    if (torb->parsed()) {
      Description d = load_description(o);
      auto orb = arcomp::mono::tau_s_orbit(d, start_id);
      if (o.format == "json") {
        nlohmann::json j;
        j["period"] = orb.period;
        j["orbit"] = nlohmann::json::array();
        for (const auto& v : orb.orbit) j["orbit"].push_back(arcomp::mono::vertex_label(v));
        emit(o, j.dump(2) + "\n");
      } else {
        std::string text = "period " + std::to_string(orb.period) + "\n";
        for (std::size_t k = 0; k < orb.orbit.size(); ++k)
          text += "tau^" + std::to_string(k) + ": " + arcomp::mono::vertex_label(orb.orbit[k]) + "\n";
        emit(o, text);
      }
      return 0;
    }
    if (comp->parsed()) {
      Description d = load_description(o);
      auto c = arcomp::mono::knit_component(d, start_id, o.depth);
      if (o.format == "dot") {
        emit(o, arcomp::mono::to_dot(c, stable_only));
      } else if (o.format == "json") {
        emit(o, arcomp::mono::component_to_json(c).dump(2) + "\n");
      } else {
        std::string text;
        text += "verdict: " + std::string(arcomp::mono::component_to_json(c)["verdict"]) + "\n";
        text += "vertices: " + std::to_string(c.vertices.size()) + " (stable " +
                std::to_string(c.stable_count()) + ")\n";
        for (const auto& v : c.vertices) text += "  " + arcomp::mono::vertex_label(v) + "\n";
        emit(o, text);
      }
      return 0;
    }
    if (tsimple->parsed()) {
      std::vector<arcomp::labels::SimpleLabel> row;
      if (pp_n > 0) {
        if (steps == 6 || steps == 3) {
          row = arcomp::labels::preprojective_tau_table(pp_n, pp_i);
          while (static_cast<long>(row.size()) > steps) row.pop_back();
        } else {
          auto d = arcomp::gprj::nakayama_description(1, pp_n);
          arcomp::labels::SimpleLabel s{0, arcomp::gprj::m_id(1, pp_i)};
          for (long k = 0; k <= steps; ++k) row.push_back(arcomp::labels::tau_a(d, s, k));
        }
      } else {
        Description d = load_description(o);
        arcomp::labels::SimpleLabel s{shift, start_id};
        for (long k = 0; k <= steps; ++k) row.push_back(arcomp::labels::tau_a(d, s, k));
      }
      if (o.format == "json") {
        nlohmann::json j;
        if (pp_n > 0) {
          j["n"] = pp_n;
          j["i"] = pp_i;
        }
        j["orbit"] = nlohmann::json::array();
        for (const auto& s : row) j["orbit"].push_back(arcomp::labels::to_json(s));
        emit(o, j.dump(2) + "\n");
      } else {
        std::string text;
        for (std::size_t k = 0; k < row.size(); ++k)
          text += "tau^" + std::to_string(k) + ": " + arcomp::labels::to_string(row[k]) + "\n";
        emit(o, text);
      }
      return 0;
    }
    if (mouth->parsed()) {
      auto ms = arcomp::labels::tube_mouth(pp_n, pp_i);
      if (o.format == "json") {
        nlohmann::json j;
        j["n"] = pp_n;
        j["i"] = pp_i;
        j["mouth"] = nlohmann::json::array();
        for (const auto& s : ms) j["mouth"].push_back(arcomp::labels::to_json(s));
        emit(o, j.dump(2) + "\n");
      } else {
        std::string text;
        for (const auto& s : ms) text += arcomp::labels::to_string(s) + "\n";
        emit(o, text);
      }
      return 0;
    }
    if (count->parsed()) {
      std::cout << arcomp::labels::simple_component_count(pp_n) << "\n";
      return 0;
    }
    if (cert->parsed()) {
      std::vector<arcomp::certify::CertResult> all;
      std::vector<std::string> claims =
          (claim == "all") ? arcomp::certify::claim_names() : std::vector<std::string>{claim};
      for (const auto& c : claims) {
        auto rs = arcomp::certify::run_claim(c, n_lo, n_hi, o.prime, o.seed);
        all.insert(all.end(), rs.begin(), rs.end());
      }
      std::cout << arcomp::certify::results_to_json(all).dump(2) << "\n";
      bool ok = true;
      for (const auto& r : all) ok = ok && r.ok;
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
