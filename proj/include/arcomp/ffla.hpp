#pragma once

// Exact dense linear algebra over a prime field F_p.
// Entries are residues in [0, p); all arithmetic is exact modular
// arithmetic, no floating point anywhere.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace arcomp::ffla {

using u64 = std::uint64_t;

class FflaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Field context for F_p. p must be prime and small enough that
// (p-1)^2 fits in a u64 product without overflow.
class Fp {
public:
  explicit Fp(u64 p);
  u64 p() const { return p_; }
  u64 reduce(long long x) const;
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;

private:
  u64 p_;
};

using Vec = std::vector<u64>;

struct Mat {
  std::size_t rows = 0, cols = 0;
  Vec a; // row-major

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  u64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n);
  bool operator==(const Mat& o) const = default;
};

Mat mul(const Fp& F, const Mat& A, const Mat& B);
Mat add(const Fp& F, const Mat& A, const Mat& B);
Mat sub(const Fp& F, const Mat& A, const Mat& B);
Mat scale(const Fp& F, u64 c, const Mat& A);
Mat transpose(const Mat& A);
Vec apply(const Fp& F, const Mat& A, const Vec& x);
Mat hstack(const Mat& A, const Mat& B);
Mat vstack(const Mat& A, const Mat& B);

// Reduced row echelon form together with pivot columns.
struct Rref {
  Mat m;
  std::vector<std::size_t> pivots;
};
Rref rref(const Fp& F, Mat A);

std::size_t rank(const Fp& F, const Mat& A);

// Basis of {x : Ax = 0}, as column vectors of length cols(A).
std::vector<Vec> kernel_basis(const Fp& F, const Mat& A);

// Some x with Ax = b, or nullopt when b is not in the column span.
std::optional<Vec> solve(const Fp& F, const Mat& A, const Vec& b);

// Solve AX = B columnwise; nullopt if any column fails.
std::optional<Mat> solve_mat(const Fp& F, const Mat& A, const Mat& B);

bool is_invertible(const Fp& F, const Mat& A);
std::optional<Mat> inverse(const Fp& F, const Mat& A);

// Row space membership helpers used by the module machinery.
// `SpanForm` keeps a rref basis of a growing subspace of F_p^n.
class SpanForm {
public:
  SpanForm(const Fp& F, std::size_t n) : F_(&F), n_(n) {}
  // Returns true if v was independent (and got inserted).
  bool insert(Vec v);
  // Residue of v modulo the span (zero vector iff v is in the span).
  Vec residue(Vec v) const;
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }

private:
  const Fp* F_;
  std::size_t n_;
  std::vector<Vec> rows_;             // reduced, pivot-sorted
  std::vector<std::size_t> pivots_;
};

// Characteristic and minimal polynomial utilities (used by the
// randomized endomorphism splitting machinery). Polynomials are
// coefficient vectors, low degree first.
using Poly = std::vector<u64>;
Poly minimal_polynomial(const Fp& F, const Mat& A);
Poly poly_gcd(const Fp& F, Poly a, Poly b);
Poly poly_mod(const Fp& F, Poly a, const Poly& m);
Poly poly_mul(const Fp& F, const Poly& a, const Poly& b);
struct PolyDivMod {
  Poly q, r;
};
PolyDivMod poly_divmod(const Fp& F, Poly a, const Poly& b);
struct PolyExtGcd {
  Poly g, s, t; // s*a + t*b = g
};
PolyExtGcd poly_ext_gcd(const Fp& F, const Poly& a, const Poly& b);
// x^(p^k) mod m, by repeated Frobenius.
Poly poly_xq_pow_mod(const Fp& F, const Poly& m, unsigned k);
// Splits m into pairwise coprime parts grouped by irreducible-factor
// degree (distinct-degree factorization on the squarefree part,
// multiplicities folded back in). Returns {} if m is a power of a
// single irreducible.
std::vector<Poly> coprime_split(const Fp& F, const Poly& m);
bool poly_irreducible(const Fp& F, const Poly& m);
Mat poly_eval_mat(const Fp& F, const Poly& f, const Mat& A);

} // namespace arcomp::ffla
