#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcomp/monocat.hpp"

using namespace arcomp::mono;
using arcomp::gprj::Description;
using arcomp::gprj::Id;
using arcomp::gprj::m_id;
using arcomp::gprj::nakayama_description;
using arcomp::gprj::t2_kx2_description;

TEST_CASE("boundary vertices and their dimension pairs") {
  auto d = nakayama_description(1, 3);
  auto b0 = boundary0(d, "M(1,1)");
  CHECK(b0.dims.sub == std::vector<int>{0});
  CHECK(b0.dims.amb == std::vector<int>{1});
  auto bd = boundary_diag(d, "M(1,2)");
  CHECK(bd.dims.sub == bd.dims.amb);
  auto bs = boundary_syz(d, "M(1,1)"); // (Omega M1 -> Lambda) = (M2 -> M3)
  CHECK(bs.dims.sub == std::vector<int>{2});
  CHECK(bs.dims.amb == std::vector<int>{3});
  CHECK_THROWS_AS(boundary0(d, "M(1,3)"), MonoError);
  CHECK_THROWS_AS(proj_inj_zero(d, "M(1,1)"), MonoError);
}

TEST_CASE("semisimple-type detection") {
  auto d2 = nakayama_description(1, 2);
  CHECK(g_semisimple(d2, "M(1,1)"));
  auto d3 = nakayama_description(1, 3);
  CHECK_FALSE(g_semisimple(d3, "M(1,1)"));
  CHECK_FALSE(g_semisimple(d3, "M(1,2)"));
  // radical-square-zero algebras with several vertices
  auto d22 = nakayama_description(2, 2);
  CHECK(g_semisimple(d22, "M(1,1)"));
  CHECK(g_semisimple(d22, "M(2,1)"));
  // the hand table is not of this type
  auto t2 = t2_kx2_description();
  CHECK_FALSE(g_semisimple(t2, "G"));
}

TEST_CASE("closed-form translate powers on one vertex, length two") {
  auto d = nakayama_description(1, 2);
  Id g = "M(1,1)";
  auto v1 = tau_s_power_boundary(d, g, 1);
  CHECK(v1.form == Form::BoundaryDiag);
  CHECK(v1.base == g);
  auto v2 = tau_s_power_boundary(d, g, 2);
  CHECK(v2.form == Form::BoundarySyz);
  CHECK(v2.base == g);
  auto v3 = tau_s_power_boundary(d, g, 3);
  CHECK(v3.form == Form::Boundary0);
  CHECK(v3.base == g);
  CHECK(tau_s_power_boundary(d, g, 0).same_vertex(boundary0(d, g)));
}

TEST_CASE("hand table translate orbits reproduce the worked example") {
  auto d = t2_kx2_description();
  // (0->G) -> (H=H) -> (K -> P_K) -> (0->G), period 3, and cyclically
  struct Row {
    Id g, diag_base, syz_base;
  };
  for (const Row& r : {Row{"G", "H", "K"}, Row{"H", "K", "G"}, Row{"K", "G", "H"}}) {
    auto orb = tau_s_orbit(d, r.g);
    REQUIRE(orb.period == 3);
    CHECK(orb.orbit[0].form == Form::Boundary0);
    CHECK(orb.orbit[0].base == r.g);
    CHECK(orb.orbit[1].form == Form::BoundaryDiag);
    CHECK(orb.orbit[1].base == r.diag_base);
    CHECK(orb.orbit[2].form == Form::BoundarySyz);
    CHECK(orb.orbit[2].base == r.syz_base);
  }
}

TEST_CASE("translate orbit periods over one vertex") {
  auto d6 = nakayama_description(1, 6);
  CHECK(tau_s_orbit(d6, "M(1,1)").period == 6);
  CHECK(tau_s_orbit(d6, "M(1,3)").period == 3); // fixed by the auto-equivalence
  auto d7 = nakayama_description(1, 7);
  for (int i = 1; i <= 6; ++i) CHECK(tau_s_orbit(d7, m_id(1, i)).period == 6);
}

TEST_CASE("negative powers invert positive ones") {
  for (auto [m, l] : {std::pair{1, 4}, {1, 7}, {3, 3}}) {
    auto d = nakayama_description(m, l);
    for (const auto& g : d.nonprojectives())
      for (long k = -9; k <= 9; ++k) {
        auto v = tau_s_power_boundary(d, g, k);
        auto back = tau_s_power_vertex(d, v, -k);
        CHECK(back.same_vertex(boundary0(d, g)));
      }
  }
}

TEST_CASE("translate power composes with vertex powers") {
  auto d = nakayama_description(1, 5);
  for (const auto& g : d.nonprojectives())
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) {
        auto va = tau_s_power_boundary(d, g, a);
        auto vab = tau_s_power_vertex(d, va, b);
        CHECK(vab.same_vertex(tau_s_power_boundary(d, g, a + b)));
      }
}

TEST_CASE("mesh ending at a boundary vertex: one vertex, length two") {
  auto d = nakayama_description(1, 2);
  auto mesh = almost_split_at(d, boundary0(d, "M(1,1)"));
  // (S=S) -> (S -> Lambda) -> (0->S)
  CHECK(mesh.left.form == Form::BoundaryDiag);
  CHECK(mesh.left.base == "M(1,1)");
  REQUIRE(mesh.middle.size() == 1);
  CHECK(mesh.middle[0].form == Form::BoundarySyz);
  CHECK(mesh.middle[0].base == "M(1,1)");
  CHECK_THROWS_AS(almost_split_at(d, proj_inj_diag(d, "M(1,2)")), MonoError);
}

TEST_CASE("mesh middles split off projective-injectives per the sink data") {
  auto d = nakayama_description(1, 3);
  // ending at (M1 = M1): middle is a single interior vertex
  auto mesh_b = almost_split_at(d, boundary_diag(d, "M(1,1)"));
  REQUIRE(mesh_b.middle.size() == 1);
  CHECK(mesh_b.middle[0].form == Form::Generic);
  CHECK(mesh_b.middle[0].dims.sub == std::vector<int>{2});
  CHECK(mesh_b.middle[0].dims.amb == std::vector<int>{4});
  // ending at (M2 = M2): the diagonal projective-injective splits off
  auto mesh_b2 = almost_split_at(d, boundary_diag(d, "M(1,2)"));
  REQUIRE(mesh_b2.middle.size() == 2);
  CHECK(mesh_b2.middle[0].form == Form::Generic);
  CHECK(mesh_b2.middle[0].dims.sub == std::vector<int>{1});
  CHECK(mesh_b2.middle[0].dims.amb == std::vector<int>{2});
  CHECK(mesh_b2.middle[1].form == Form::ProjInjDiag);
  // ending at (M1 -> Lambda) = boundary_syz(M2): the zero-row
  // projective-injective splits off
  auto mesh_c = almost_split_at(d, boundary_syz(d, "M(1,2)"));
  REQUIRE(mesh_c.middle.size() == 2);
  CHECK(mesh_c.middle[0].form == Form::Generic);
  CHECK(mesh_c.middle[1].form == Form::ProjInjZero);
  // ending at (M2 -> Lambda) = boundary_syz(M1): no projective-injective
  auto mesh_c2 = almost_split_at(d, boundary_syz(d, "M(1,1)"));
  REQUIRE(mesh_c2.middle.size() == 1);
  CHECK(mesh_c2.middle[0].dims.sub == std::vector<int>{2});
  CHECK(mesh_c2.middle[0].dims.amb == std::vector<int>{4});
}

TEST_CASE("every boundary mesh is dimension additive") {
  for (auto [m, l] : {std::pair{1, 4}, {1, 6}, {1, 7}, {2, 3}, {3, 3}}) {
    auto d = nakayama_description(m, l);
    for (const auto& g : d.nonprojectives()) {
      auto orb = tau_s_orbit(d, g);
      for (const auto& v : orb.orbit) {
        auto mesh = almost_split_at(d, v);
        DimPair sum = dim_pair_add(mesh.left.dims, mesh.right.dims);
        for (const auto& mid : mesh.middle) sum = dim_pair_sub(sum, mid.dims);
        CHECK(dim_pair_is_zero(sum));
      }
    }
  }
}

TEST_CASE("single-step walk along left terms matches the closed form") {
  for (auto [m, l] : {std::pair{1, 3}, {1, 5}, {3, 3}}) {
    auto d = nakayama_description(m, l);
    for (const auto& g : d.nonprojectives()) {
      Vertex cur = boundary0(d, g);
      for (long k = 1; k <= 12; ++k) {
        cur = almost_split_at(d, cur).left;
        CHECK(cur.same_vertex(tau_s_power_boundary(d, g, k)));
      }
    }
  }
}

TEST_CASE("hand table: mesh structure at the three boundary forms of one family") {
  auto d = t2_kx2_description();
  // at (0->G): single interior middle (H -> K shape, dims (1,1),(1,2))
  auto m0 = almost_split_at(d, boundary0(d, "G"));
  REQUIRE(m0.middle.size() == 1);
  CHECK(m0.middle[0].form == Form::Generic);
  CHECK(m0.middle[0].dims.sub == std::vector<int>{1, 1});
  CHECK(m0.middle[0].dims.amb == std::vector<int>{1, 2});
  // at (H=H): interior + (PD=PD)
  auto m1 = almost_split_at(d, boundary_diag(d, "H"));
  REQUIRE(m1.middle.size() == 2);
  CHECK(m1.middle[0].dims.sub == std::vector<int>{0, 1});
  CHECK(m1.middle[0].dims.amb == std::vector<int>{1, 3});
  CHECK(m1.middle[1].form == Form::ProjInjDiag);
  CHECK(m1.middle[1].base == "PD");
  // at (K -> P_K) = boundary_syz(K): interior + (0 -> PZ)
  auto m2 = almost_split_at(d, boundary_syz(d, "K"));
  REQUIRE(m2.middle.size() == 2);
  CHECK(m2.middle[0].dims.sub == std::vector<int>{1, 2});
  CHECK(m2.middle[0].dims.amb == std::vector<int>{2, 3});
  CHECK(m2.middle[1].form == Form::ProjInjZero);
  CHECK(m2.middle[1].base == "PZ");
}
