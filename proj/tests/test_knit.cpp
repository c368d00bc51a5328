#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "arcomp/monocat.hpp"

using namespace arcomp::mono;
using arcomp::gprj::Id;
using arcomp::gprj::m_id;
using arcomp::gprj::nakayama_description;
using arcomp::gprj::t2_kx2_description;

static void check_meshes_additive(const ComponentQuiver& c) {
  for (const auto& m : c.meshes) {
    DimPair sum = dim_pair_add(c.vertices[static_cast<std::size_t>(m.left)].dims,
                               c.vertices[static_cast<std::size_t>(m.right)].dims);
    for (int mid : m.middles) sum = dim_pair_sub(sum, c.vertices[static_cast<std::size_t>(mid)].dims);
    CHECK(dim_pair_is_zero(sum));
  }
}

TEST_CASE("oriented cycle for the length-two algebra") {
  auto d = nakayama_description(1, 2);
  auto c = knit_component(d, "M(1,1)", 6);
  CHECK(c.kind == ComponentQuiver::Kind::OrientedCycle);
  CHECK(c.stable_count() == 3);
  std::set<std::string> keys;
  for (const auto& v : c.vertices)
    if (!v.is_proj_inj()) keys.insert(v.key());
  CHECK(keys == std::set<std::string>{"0|M(1,1)", "D|M(1,1)", "S|M(1,1)"});
  check_meshes_additive(c);
  CHECK(boundary_orbit_census(c) == 1);
}

TEST_CASE("oriented cycle vertex counts grow with the syzygy orbit") {
  auto d = nakayama_description(2, 2); // two syzygy-related simples
  auto c = knit_component(d, "M(1,1)", 6);
  CHECK(c.kind == ComponentQuiver::Kind::OrientedCycle);
  CHECK(c.stable_count() == 6);
  check_meshes_additive(c);
}

TEST_CASE("finite knit of the one-vertex length-three category") {
  auto d = nakayama_description(1, 3);
  auto c = knit_component(d, "M(1,1)", 6);
  CHECK(c.kind == ComponentQuiver::Kind::DynkinQuotient);
  // six boundary vertices and two interior ones
  CHECK(c.stable_count() == 8);
  int interior = 0;
  std::map<std::string, int> interior_dims;
  for (const auto& v : c.vertices)
    if (v.form == Form::Generic) {
      ++interior;
      std::string key = std::to_string(v.dims.sub[0]) + "," + std::to_string(v.dims.amb[0]);
      interior_dims[key]++;
    }
  CHECK(interior == 2);
  CHECK(interior_dims["1,2"] == 1);
  CHECK(interior_dims["2,4"] == 1);
  check_meshes_additive(c);
  CHECK(boundary_orbit_census(c) == 1);
  // the two interior vertices swap under the translation
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (c.vertices[i].form == Form::Generic) {
      int t = c.translation.at(static_cast<int>(i));
      CHECK(c.vertices[static_cast<std::size_t>(t)].form == Form::Generic);
      CHECK(c.translation.at(t) == static_cast<int>(i));
    }
}

TEST_CASE("finite knit of the hand table finds one component with three orbit families") {
  auto d = t2_kx2_description();
  auto c = knit_component(d, "G", 6);
  CHECK(c.kind == ComponentQuiver::Kind::DynkinQuotient);
  // nine boundary + three interior
  CHECK(c.stable_count() == 12);
  CHECK(c.vertices.size() == 16); // with the four projective-injectives
  int interior = 0;
  for (const auto& v : c.vertices)
    if (v.form == Form::Generic) ++interior;
  CHECK(interior == 3);
  check_meshes_additive(c);
  CHECK(boundary_orbit_census(c) == 3);
  // interior translation is a 3-cycle
  std::set<int> seen;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    if (c.vertices[i].form == Form::Generic) {
      int a = static_cast<int>(i);
      int b = c.translation.at(a);
      int cc = c.translation.at(b);
      CHECK(c.translation.at(cc) == a);
      CHECK(c.vertices[static_cast<std::size_t>(b)].form == Form::Generic);
      CHECK(c.vertices[static_cast<std::size_t>(cc)].form == Form::Generic);
      seen.insert(a);
    }
  CHECK(seen.size() == 3);
}

TEST_CASE("tube truncations") {
  for (int n : {6, 7}) {
    auto d = nakayama_description(1, n);
    for (const auto& g : d.nonprojectives()) {
      auto c = knit_component(d, g, 6);
      CHECK(c.kind == ComponentQuiver::Kind::TubeTruncation);
      CHECK(c.depth == 6);
      check_meshes_additive(c);
      // mouth property: each mouth vertex has exactly one stable
      // predecessor and successor
      std::map<int, int> in_stable, out_stable;
      for (const auto& [a, b] : c.arrows) {
        if (c.vertices[static_cast<std::size_t>(a)].is_proj_inj() ||
            c.vertices[static_cast<std::size_t>(b)].is_proj_inj())
          continue;
        out_stable[a]++;
        in_stable[b]++;
      }
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (!c.vertices[i].is_boundary()) continue;
        CHECK(in_stable[static_cast<int>(i)] == 1);
        CHECK(out_stable[static_cast<int>(i)] == 1);
      }
    }
  }
}

TEST_CASE("tube depth zero keeps the mouth only") {
  auto d = nakayama_description(1, 6);
  auto c = knit_component(d, "M(1,1)", 0);
  CHECK(c.kind == ComponentQuiver::Kind::TubeTruncation);
  CHECK(c.mouth_period == 6);
  for (const auto& v : c.vertices) CHECK(v.form != Form::Generic);
  CHECK(c.meshes.empty());
}

TEST_CASE("tube mouth periods match the orbit sizes") {
  auto d = nakayama_description(1, 6);
  CHECK(knit_component(d, "M(1,1)", 4).mouth_period == 6);
  CHECK(knit_component(d, "M(1,3)", 4).mouth_period == 3);
}

TEST_CASE("unknown finite type yields an unclassified partial knit") {
  auto d = nakayama_description(3, 3);
  auto c = knit_component(d, "M(1,1)", 6);
  CHECK(c.kind == ComponentQuiver::Kind::Unclassified);
  CHECK_THROWS_AS(boundary_orbit_census(c), MonoError);
}

TEST_CASE("orbit-to-component table") {
  auto d7 = nakayama_description(1, 7);
  auto rep7 = delta_map(d7, 6);
  CHECK(rep7.rows.size() == 3);
  CHECK(rep7.surjective);
  CHECK(rep7.injective_on_infinite);
  std::set<std::string> ids;
  for (const auto& r : rep7.rows) {
    CHECK(r.infinite);
    ids.insert(r.component_id);
  }
  CHECK(ids.size() == 3);

  auto d8 = nakayama_description(1, 8);
  auto rep8 = delta_map(d8, 6);
  CHECK(rep8.rows.size() == 4);
  CHECK(rep8.injective_on_infinite);

  auto d2 = nakayama_description(1, 2);
  auto rep2 = delta_map(d2, 6);
  CHECK(rep2.rows.size() == 1);
  CHECK_FALSE(rep2.rows[0].infinite);

  // the hand table: three orbit families, a single finite component
  auto t2 = t2_kx2_description();
  auto rept = delta_map(t2, 6);
  CHECK(rept.rows.size() == 3);
  std::set<std::string> tids;
  for (const auto& r : rept.rows) tids.insert(r.component_id);
  CHECK(tids.size() == 1);
}

TEST_CASE("exports") {
  auto d = nakayama_description(1, 2);
  auto c = knit_component(d, "M(1,1)", 6);
  auto dot = to_dot(c, false);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("peripheries=2") != std::string::npos);
  auto dot_stable = to_dot(c, true);
  CHECK(dot_stable.find("peripheries=2") == std::string::npos);
  auto j = component_to_json(c);
  CHECK(j["verdict"] == "oriented_cycle");
  CHECK(j["vertices"].size() == c.vertices.size());
}

TEST_CASE("larger finite knits close consistently") {
  for (int n : {4, 5}) {
    auto d = nakayama_description(1, n);
    std::set<std::string> components;
    for (const auto& g : d.nonprojectives()) {
      auto c = knit_component(d, g, 6);
      CHECK((c.kind == ComponentQuiver::Kind::DynkinQuotient ||
             c.kind == ComponentQuiver::Kind::OrientedCycle));
      check_meshes_additive(c);
      CHECK(boundary_orbit_census(c) <= 3);
      components.insert(component_fingerprint(d, g, 6));
    }
    // orbit count bounds the component count
    CHECK(components.size() <= arcomp::gprj::theta_orbits(d).size());
  }
}
