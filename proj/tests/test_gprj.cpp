#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "arcomp/gprj.hpp"

using namespace arcomp::gprj;

TEST_CASE("nakayama construction basics") {
  CHECK_THROWS_AS(nakayama_description(1, 1), DescriptionError);
  auto d = nakayama_description(1, 4);
  CHECK(d.objects.size() == 4);
  CHECK(d.nonprojectives().size() == 3);
  CHECK(d.is_projective("M(1,4)"));
  // syzygy of M(1,i) is M(1, n-i)
  for (int i = 1; i <= 3; ++i) CHECK(d.syz.at(m_id(1, i)) == m_id(1, 4 - i));
  // translate is the identity on one vertex
  for (int i = 1; i <= 3; ++i) CHECK(d.tau.at(m_id(1, i)) == m_id(1, i));
}

TEST_CASE("single non-projective for Loewy length two") {
  auto d = nakayama_description(1, 2);
  CHECK(d.nonprojectives() == std::vector<Id>{"M(1,1)"});
  CHECK(d.ar_middle.at("M(1,1)") == std::vector<Id>{"M(1,2)"});
}

TEST_CASE("middle terms and dim vectors for several vertices") {
  auto d = nakayama_description(3, 3);
  CHECK(d.objects.size() == 9);
  // M(1,2) has factors at vertices 1 and 3
  CHECK(d.dim("M(1,2)") == DimVec{1, 0, 1});
  // the mesh ending at a simple has the length-two module with the
  // same top as its single middle
  CHECK(d.ar_middle.at("M(1,1)") == std::vector<Id>{"M(1,2)"});
  CHECK(d.ar_middle.at("M(1,2)") == std::vector<Id>{"M(1,3)", "M(3,1)"});
}

TEST_CASE("three-vertex Loewy-three calibration: theta pairs each simple with a length-two module") {
  // this fixes the orientation convention once and for all
  auto d = nakayama_description(3, 3);
  CHECK(theta(d, "M(1,1)") == "M(3,2)");
  CHECK(theta(d, "M(3,1)") == "M(2,2)");
  CHECK(theta(d, "M(2,1)") == "M(1,2)");
  auto orbits = theta_orbits(d);
  REQUIRE(orbits.size() == 3);
  // orbits start at their smallest member; the pairing is what matters
  CHECK(orbits[0].members == std::vector<Id>{"M(1,1)", "M(3,2)"});
  CHECK(orbits[1].members == std::vector<Id>{"M(1,2)", "M(2,1)"});
  CHECK(orbits[2].members == std::vector<Id>{"M(2,2)", "M(3,1)"});
}

TEST_CASE("theta orbits over one vertex") {
  auto d7 = nakayama_description(1, 7);
  auto o7 = theta_orbits(d7);
  REQUIRE(o7.size() == 3);
  CHECK(o7[0].members == std::vector<Id>{"M(1,1)", "M(1,6)"});
  CHECK(o7[1].members == std::vector<Id>{"M(1,2)", "M(1,5)"});
  CHECK(o7[2].members == std::vector<Id>{"M(1,3)", "M(1,4)"});

  auto d2 = nakayama_description(1, 2);
  auto o2 = theta_orbits(d2);
  REQUIRE(o2.size() == 1);
  CHECK(o2[0].members == std::vector<Id>{"M(1,1)"});

  // even case: the middle module is a fixed point
  auto d8 = nakayama_description(1, 8);
  CHECK(theta(d8, "M(1,4)") == "M(1,4)");
}

TEST_CASE("theta is computed identically by its three factorizations and partitions") {
  for (auto [m, l] : {std::pair{1, 5}, {2, 3}, {3, 3}, {2, 4}, {1, 8}}) {
    auto d = nakayama_description(m, l);
    std::set<Id> seen;
    auto orbits = theta_orbits(d);
    for (const auto& orb : orbits)
      for (const auto& g : orb.members) {
        CHECK_FALSE(seen.count(g));
        seen.insert(g);
        CHECK(theta_inv(d, theta(d, g)) == g);
      }
    CHECK(seen.size() == d.nonprojectives().size());
    CHECK(d.nonprojectives().size() == static_cast<std::size_t>(m * (l - 1)));
  }
}

TEST_CASE("serialization round trip") {
  auto d = nakayama_description(3, 3);
  auto j = description_to_json(d);
  auto d2 = description_from_json(j);
  CHECK(description_to_json(d2) == j);
  CHECK(d2.objects.size() == d.objects.size());
  CHECK(d2.tau == d.tau);
  CHECK(d2.ar_middle == d.ar_middle);
}

TEST_CASE("hand table loads and is calibrated") {
  auto d = t2_kx2_description();
  CHECK(d.nonprojectives().size() == 3);
  CHECK(d.tau.at("G") == "H");
  CHECK(d.tau.at("H") == "K");
  CHECK(d.tau.at("K") == "G");
  CHECK(d.syz.at("K") == "K");
  CHECK(d.finite_type == FiniteType::Finite);
  // singleton theta orbits
  auto orbits = theta_orbits(d);
  REQUIRE(orbits.size() == 3);
  for (const auto& orb : orbits) CHECK(orb.members.size() == 1);
}

TEST_CASE("tables violating the invariants are rejected") {
  auto j = nlohmann::json::parse(t2_kx2_table_text());
  // break dim additivity
  auto bad = j;
  bad["objects"][0]["dim"] = {5, 5};
  CHECK_THROWS_AS(description_from_json(bad), DescriptionError);
  // drop a translate entry
  bad = j;
  bad["tau"].erase("G");
  CHECK_THROWS_AS(description_from_json(bad), DescriptionError);
  // make the translate non-injective
  bad = j;
  bad["tau"]["G"] = "K";
  bad["tau"]["H"] = "K";
  CHECK_THROWS_AS(description_from_json(bad), DescriptionError);
}

TEST_CASE("finite type catalog") {
  CHECK(nakayama_description(1, 5).finite_type == FiniteType::Finite);
  CHECK(nakayama_description(1, 6).finite_type == FiniteType::Infinite);
  CHECK(nakayama_description(1, 9).finite_type == FiniteType::Infinite);
  CHECK(nakayama_description(2, 3).finite_type == FiniteType::Unknown);
}
