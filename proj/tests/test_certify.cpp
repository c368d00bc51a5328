#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "arcomp/certify.hpp"
#include "arcomp/monocat.hpp"

using namespace arcomp::certify;
namespace oracle = arcomp::oracle;
namespace mono = arcomp::mono;
namespace gprj = arcomp::gprj;

TEST_CASE("submodule category objects and the induced sequences") {
  SLnContext ctx(3, 101);
  CHECK(ctx.t2().dim() == 9);
  CHECK(ctx.is_mono_object(ctx.boundary_syz(1)));
  CHECK(ctx.is_mono_object(ctx.boundary_diag(2)));
  Rng rng(5);
  for (int t = 1; t <= 2; ++t) {
    auto w0 = ctx.mesh_ending_at_zero(t);
    auto w1 = ctx.mesh_ending_at_diag(t);
    auto w2 = ctx.mesh_ending_at_syz(t);
    for (const auto* w : {&w0, &w1, &w2}) {
      CHECK(oracle::ses_exact(ctx.t2(), *w));
      CHECK(ctx.is_mono_object(w->left));
      CHECK(ctx.is_mono_object(w->middle));
      CHECK(ctx.is_mono_object(w->right));
    }
  }
}

TEST_CASE("enumeration of the length-two submodule category") {
  SLnContext ctx(2, 101);
  Rng rng(7);
  auto all = ctx.enumerate_indecomposables(rng);
  CHECK(all.size() == 5);
}

TEST_CASE("enumeration counts match the symbolic knit") {
  for (int n : {3, 4}) {
    SLnContext ctx(n, 101);
    Rng rng(11);
    auto all = ctx.enumerate_indecomposables(rng);
    // symbolic side: union of all knitted components plus the two
    // projective-injective objects
    auto d = gprj::nakayama_description(1, n);
    std::set<std::string> keys;
    int proj_inj = 0;
    for (const auto& g : d.nonprojectives()) {
      auto c = mono::knit_component(d, g, 6);
      for (const auto& v : c.vertices) keys.insert(v.key());
    }
    for (const auto& k : keys)
      if (k.rfind("PZ|", 0) == 0 || k.rfind("PD|", 0) == 0) ++proj_inj;
    // every projective-injective of the ambient category shows up in
    // some component here, so the counts line up exactly
    CHECK(all.size() == keys.size());
    (void)proj_inj;
  }
}

TEST_CASE("mesh certification claim passes for small lengths") {
  auto rs = run_claim("mesh-certification", 2, 3, 101, 0);
  CHECK(rs.size() == 9);
  for (const auto& r : rs) {
    INFO(r.instance, " ", r.witness);
    CHECK(r.ok);
  }
}

TEST_CASE("translate table claim") {
  auto rs = run_claim("translate-table", 2, 3, 101, 0);
  CHECK(!rs.empty());
  for (const auto& r : rs) CHECK(r.ok);
}

TEST_CASE("ext vanishing claim") {
  auto rs = run_claim("ext-vanishing", 2, 5, 101, 0);
  for (const auto& r : rs) {
    INFO(r.instance);
    CHECK(r.ok);
  }
}

TEST_CASE("socle nonvanishing claim") {
  auto rs = run_claim("socle-nonvanishing", 3, 4, 101, 0);
  for (const auto& r : rs) CHECK(r.ok);
}

TEST_CASE("simple translate iso claim, smallest case") {
  auto rs = run_claim("simple-translate-iso", 3, 3, 101, 0);
  CHECK(rs.size() == 12);
  for (const auto& r : rs) {
    INFO(r.instance, " ", r.witness);
    CHECK(r.ok);
  }
}

TEST_CASE("report serialization") {
  std::vector<CertResult> rs{{"c", "i", true, ""}, {"c", "j", false, "boom"}};
  auto j = results_to_json(rs);
  CHECK(j.size() == 2);
  CHECK(j[0]["verdict"] == "pass");
  CHECK(j[1]["verdict"] == "fail");
  CHECK(j[1]["witness"] == "boom");
}
