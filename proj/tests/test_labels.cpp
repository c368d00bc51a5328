#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "arcomp/labels.hpp"
#include "arcomp/monocat.hpp"

using namespace arcomp::labels;
using arcomp::gprj::m_id;
using arcomp::gprj::nakayama_description;
using arcomp::gprj::t2_kx2_description;

TEST_CASE("normalization keeps shifts within one syzygy") {
  auto d = nakayama_description(1, 7);
  // three syzygies of a simple label land on the syzygy of the base
  auto s = normalize(d, 3, "M(1,2)");
  CHECK(s.shift == 0);
  CHECK(s.base == "M(1,5)");
  auto t = normalize(d, 2, "M(1,2)");
  CHECK(t.shift == -1);
  CHECK(t.base == "M(1,5)");
  auto u = normalize(d, -2, "M(1,2)");
  CHECK(u.shift == 1);
  CHECK(u.base == "M(1,5)");
}

TEST_CASE("one-vertex translate steps follow the stated clauses") {
  auto d = nakayama_description(1, 7);
  SimpleLabel s{0, "M(1,2)"};
  // one step: inverse syzygy of the same simple (translate fixes bases)
  auto t1 = tau_a(d, s, 1);
  CHECK(t1 == SimpleLabel{-1, "M(1,2)"});
  // two steps: syzygy shift at the complementary base
  auto t2 = tau_a(d, s, 2);
  CHECK(t2 == SimpleLabel{1, "M(1,5)"});
  // three steps: plain simple at the orbit partner
  auto t3 = tau_a(d, s, 3);
  CHECK(t3 == SimpleLabel{0, "M(1,5)"});
  // six steps: home again
  CHECK(tau_a(d, s, 6) == s);
  // negative direction per the inverse clauses
  CHECK(tau_a(d, s, -1) == SimpleLabel{1, "M(1,2)"});
  CHECK(tau_a(d, s, -2) == SimpleLabel{-1, "M(1,5)"});
  CHECK(tau_a(d, s, -3) == SimpleLabel{0, "M(1,5)"});
}

TEST_CASE("translate steps on the three-vertex example") {
  auto d = nakayama_description(3, 3);
  SimpleLabel s{0, "M(1,1)"};
  // unnormalized theorem clauses, stepwise
  auto t1 = tau_a(d, s, 1);
  CHECK(t1 == SimpleLabel{-1, "M(3,1)"});
  auto t2 = tau_a(d, s, 2);
  CHECK(t2 == SimpleLabel{1, "M(1,2)"});
  auto t3 = tau_a(d, s, 3);
  CHECK(t3 == SimpleLabel{0, "M(3,2)"}); // the orbit partner of the base
  CHECK(t3.base == arcomp::gprj::theta(d, "M(1,1)"));
  auto t6 = tau_a(d, s, 6);
  CHECK(t6 == s); // period six
}

TEST_CASE("composition of translate powers") {
  for (auto mk : {std::pair{1, 7}, {3, 3}, {1, 5}}) {
    auto d = nakayama_description(mk.first, mk.second);
    for (const auto& g : d.nonprojectives()) {
      if (arcomp::mono::g_semisimple(d, g)) continue;
      SimpleLabel s{0, g};
      for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
          CHECK(tau_a(d, tau_a(d, s, a), b) == tau_a(d, s, a + b));
    }
  }
}

TEST_CASE("semisimple-type hypothesis is enforced") {
  auto d = nakayama_description(1, 2);
  SimpleLabel s{0, "M(1,1)"};
  CHECK_THROWS_AS(tau_a(d, s, 1), LabelError);
  CHECK_THROWS_AS(tau_a(d, s, -2), LabelError);
  // multiples of three act through the orbit map
  CHECK(tau_a(d, s, 3) == SimpleLabel{0, "M(1,1)"});
}

TEST_CASE("preprojective orbit tables are literal") {
  // generic index: period six with the stated entries
  auto row = preprojective_tau_table(7, 2);
  REQUIRE(row.size() == 6);
  CHECK(row[0] == SimpleLabel{0, "M(1,2)"});
  CHECK(row[1] == SimpleLabel{-1, "M(1,2)"});
  CHECK(row[2] == SimpleLabel{1, "M(1,5)"});
  CHECK(row[3] == SimpleLabel{0, "M(1,5)"});
  CHECK(row[4] == SimpleLabel{-1, "M(1,5)"});
  CHECK(row[5] == SimpleLabel{1, "M(1,2)"});
  // middle index: period three
  auto mid = preprojective_tau_table(6, 3);
  REQUIRE(mid.size() == 3);
  CHECK(mid[0] == SimpleLabel{0, "M(1,3)"});
  CHECK(mid[1] == SimpleLabel{-1, "M(1,3)"});
  CHECK(mid[2] == SimpleLabel{1, "M(1,3)"});
  // the forced branch at n = 2
  auto tiny = preprojective_tau_table(2, 1);
  REQUIRE(tiny.size() == 3);
  CHECK_THROWS_AS(preprojective_tau_table(5, 5), LabelError);
}

TEST_CASE("orbit tables agree with the step engine") {
  for (int n = 3; n <= 10; ++n) {
    auto d = nakayama_description(1, n);
    for (int i = 1; i <= n - 1; ++i) {
      auto row = preprojective_tau_table(n, i);
      SimpleLabel s{0, m_id(1, i)};
      for (std::size_t j = 0; j < row.size(); ++j)
        CHECK(row[j] == tau_a(d, s, static_cast<long>(j)));
      CHECK(tau_a(d, s, static_cast<long>(row.size())) == s);
    }
  }
}

TEST_CASE("component counts") {
  CHECK(simple_component_count(6) == 3);
  CHECK(simple_component_count(7) == 3);
  CHECK(simple_component_count(8) == 4);
  CHECK(simple_component_count(9) == 4);
  CHECK(simple_component_count(10) == 5);
  CHECK_THROWS_AS(simple_component_count(5), LabelError);
}

TEST_CASE("tube mouths") {
  auto m = tube_mouth(7, 1);
  REQUIRE(m.size() == 6);
  CHECK(m[0] == SimpleLabel{1, "M(1,1)"});
  CHECK(m[1] == SimpleLabel{-1, "M(1,6)"});
  CHECK(m[2] == SimpleLabel{0, "M(1,6)"});
  CHECK(m[3] == SimpleLabel{1, "M(1,6)"});
  CHECK(m[4] == SimpleLabel{-1, "M(1,1)"});
  CHECK(m[5] == SimpleLabel{0, "M(1,1)"});
  auto c = tube_mouth(6, 3);
  REQUIRE(c.size() == 3);
  // mouths at complementary indices agree as sets
  for (int n : {6, 7, 8}) {
    for (int i = 1; i <= n - 1; ++i) {
      auto a = tube_mouth(n, i);
      auto b = tube_mouth(n, n - i);
      std::set<SimpleLabel> sa(a.begin(), a.end()), sb(b.begin(), b.end());
      CHECK(sa == sb);
    }
  }
  CHECK_THROWS_AS(tube_mouth(5, 1), LabelError);
  CHECK_THROWS_AS(tube_mouth(7, 7), LabelError);
}

TEST_CASE("the mouth is the inverse-translate orbit of the shifted simple") {
  for (int n : {6, 7, 9}) {
    auto d = nakayama_description(1, n);
    for (int i = 1; i <= n - 1; ++i) {
      auto m = tube_mouth(n, i);
      SimpleLabel start{1, m_id(1, i)};
      for (std::size_t k = 0; k < m.size(); ++k)
        CHECK(m[k] == tau_a(d, start, -static_cast<long>(k)));
    }
  }
}

TEST_CASE("tube coordinate translation") {
  auto [c1, s1] = tube_translate(7, 1, {1, 2}, 1);
  CHECK(c1 == TubeCoord{2, 2});
  CHECK(s1 == -1);
  auto [c6, s6] = tube_translate(7, 1, {1, 2}, 6);
  CHECK(c6 == TubeCoord{1, 2});
  CHECK(s6 == 0);
  auto [c5, s5] = tube_translate(7, 1, {1, 2}, 5);
  CHECK(s5 == 1);
  auto [cm, sm] = tube_translate(6, 3, {1, 4}, 2);
  CHECK(cm == TubeCoord{3, 4});
  CHECK(sm == 1);
  auto [cn, sn] = tube_translate(6, 3, {1, 4}, -1);
  CHECK(sn == 1); // one step back equals two forward on a rank-three tube
  CHECK(cn == TubeCoord{3, 4});
}

TEST_CASE("component map into the stable Auslander side") {
  auto d2 = nakayama_description(1, 2);
  auto r2 = lambda_map(d2, 6);
  REQUIRE(r2.rows.size() == 1);
  CHECK(r2.rows[0].collapsed);
  CHECK(r2.rows[0].a_component == "(empty)");

  auto d7 = nakayama_description(1, 7);
  auto r7 = lambda_map(d7, 6);
  REQUIRE(r7.rows.size() == 3);
  CHECK(r7.injective_on_infinite);
  std::set<std::string> ids;
  for (const auto& row : r7.rows) {
    CHECK(row.infinite);
    ids.insert(row.a_component);
  }
  CHECK(ids.size() == 3);

  auto t2 = t2_kx2_description();
  auto rt = lambda_map(t2, 6);
  REQUIRE(rt.rows.size() == 1); // one component
  CHECK_FALSE(rt.rows[0].collapsed);
}
