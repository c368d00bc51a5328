#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arcomp/ffla.hpp"

using namespace arcomp::ffla;

static Mat from_rows(std::initializer_list<std::initializer_list<long long>> rows, const Fp& F) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  Mat M(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long x : row) M.at(i, j++) = F.reduce(x);
    ++i;
  }
  return M;
}

static Mat random_mat(const Fp& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat M(r, c);
  std::uniform_int_distribution<u64> d(0, F.p() - 1);
  for (auto& x : M.a) x = d(rng);
  return M;
}

TEST_CASE("field context rejects non-primes") {
  CHECK_THROWS_AS(Fp(100), FflaError);
  CHECK_NOTHROW(Fp(101));
  Fp F(101);
  CHECK(F.inv(2) == 51);
  CHECK(F.mul(F.inv(7), 7) == 1);
}

TEST_CASE("rank basics") {
  Fp F(101);
  CHECK(rank(F, Mat(0, 0)) == 0);
  CHECK(rank(F, Mat::identity(3)) == 3);
  // hand elimination: second row is twice the first
  Mat A = from_rows({{1, 2}, {2, 4}}, F);
  CHECK(rank(F, A) == 1);
}

TEST_CASE("kernel basics") {
  Fp F(101);
  CHECK(kernel_basis(F, Mat::identity(2)).empty());
  CHECK(kernel_basis(F, Mat(2, 3)).size() == 3);
  Mat A = from_rows({{1, 2}, {2, 4}}, F);
  auto kb = kernel_basis(F, A);
  REQUIRE(kb.size() == 1);
  // the kernel is spanned by (2, -1) up to scalar: check proportionality
  // by cross-multiplication 2 * v[1] == -1 * v[0]
  CHECK(F.mul(2, kb[0][1]) == F.mul(F.neg(1), kb[0][0]));
  // and it really solves A x = 0
  auto y = apply(F, A, kb[0]);
  CHECK(y == Vec{0, 0});
}

TEST_CASE("solve basics") {
  Fp F(101);
  Vec b{5, 7};
  auto x = solve(F, Mat::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
  CHECK_FALSE(solve(F, Mat(2, 2), Vec{1, 0}).has_value());
  // back substitution example
  Mat A = from_rows({{1, 1}, {0, 1}}, F);
  auto s = solve(F, A, Vec{3, 1});
  REQUIRE(s.has_value());
  CHECK(*s == Vec{2, 1});
  CHECK_THROWS_AS(solve(F, A, Vec{1, 2, 3}), FflaError);
}

TEST_CASE("rank-nullity, exact solves, transpose rank on random matrices") {
  Fp F(101);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + trial % 6, c = 1 + (trial * 3) % 7;
    Mat A = random_mat(F, r, c, rng);
    std::size_t rk = rank(F, A);
    CHECK(rk + kernel_basis(F, A).size() == c);
    CHECK(rank(F, transpose(A)) == rk);
    // any consistent rhs is solved exactly
    Vec x0(c);
    std::uniform_int_distribution<u64> d(0, F.p() - 1);
    for (auto& v : x0) v = d(rng);
    Vec b = apply(F, A, x0);
    auto x = solve(F, A, b);
    REQUIRE(x.has_value());
    CHECK(apply(F, A, *x) == b);
  }
}

TEST_CASE("span form tracks residues") {
  Fp F(101);
  SpanForm s(F, 3);
  CHECK(s.insert(Vec{1, 2, 3}));
  CHECK(s.insert(Vec{0, 1, 1}));
  CHECK_FALSE(s.insert(Vec{1, 3, 4}));
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{2, 4, 6}));
  CHECK_FALSE(s.contains(Vec{0, 0, 1}));
}

TEST_CASE("minimal polynomial and splitting") {
  Fp F(101);
  // nilpotent Jordan block: minimal polynomial x^2
  Mat N(2, 2);
  N.at(0, 1) = 1;
  auto m = minimal_polynomial(F, N);
  CHECK(m == Poly{0, 0, 1});
  CHECK(coprime_split(F, m).empty()); // power of a single irreducible
  // diag(0, 1): minimal polynomial x(x-1), splits
  Mat D(2, 2);
  D.at(1, 1) = 1;
  auto md = minimal_polynomial(F, D);
  CHECK(md.size() == 3);
  CHECK(coprime_split(F, md).size() == 2);
}

TEST_CASE("irreducibility test") {
  Fp F(101);
  // x^2 - g for a non-square g is irreducible; find one by scanning
  u64 nonsq = 0;
  for (u64 g = 2; g < 101; ++g) {
    bool sq = false;
    for (u64 y = 0; y < 101; ++y)
      if (y * y % 101 == g) sq = true;
    if (!sq) {
      nonsq = g;
      break;
    }
  }
  Poly f{F.neg(nonsq), 0, 1};
  CHECK(poly_irreducible(F, f));
  Poly g{0, 1}; // x
  CHECK(poly_irreducible(F, g));
  Poly h = poly_mul(F, f, g);
  CHECK_FALSE(poly_irreducible(F, h));
}

TEST_CASE("extended gcd") {
  Fp F(101);
  Poly a{1, 1};          // 1 + x
  Poly b{1, 0, 1};       // 1 + x^2
  auto eg = poly_ext_gcd(F, a, b);
  REQUIRE(eg.g.size() == 1);
  // s a + t b = g
  Poly lhs = poly_mul(F, eg.s, a);
  Poly rhs = poly_mul(F, eg.t, b);
  if (lhs.size() < rhs.size()) lhs.resize(rhs.size(), 0);
  if (rhs.size() < lhs.size()) rhs.resize(lhs.size(), 0);
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = F.add(lhs[i], rhs[i]);
  while (!lhs.empty() && lhs.back() == 0) lhs.pop_back();
  CHECK(lhs == eg.g);
}
