#include "arcomp/ffla.hpp"

#include <algorithm>
#include <random>

namespace arcomp::ffla {

static bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(u64 p) : p_(p) {
  if (!is_prime(p)) throw FflaError("modulus is not prime");
  if (p > (1ull << 31)) throw FflaError("modulus too large for exact u64 products");
}

u64 Fp::reduce(long long x) const {
  long long m = static_cast<long long>(p_);
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 Fp::pow(u64 a, u64 e) const {
  u64 r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Fp::inv(u64 a) const {
  a %= p_;
  if (a == 0) throw FflaError("division by zero in F_p");
  return pow(a, p_ - 2);
}

Mat Mat::identity(std::size_t n) {
  Mat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mul(const Fp& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw FflaError("matrix product dimension mismatch");
  Mat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      u64 aik = A.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

Mat add(const Fp& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw FflaError("matrix sum dimension mismatch");
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

Mat sub(const Fp& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw FflaError("matrix diff dimension mismatch");
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

Mat scale(const Fp& F, u64 c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c % F.p(), A.a[i]);
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Vec apply(const Fp& F, const Mat& A, const Vec& x) {
  if (A.cols != x.size()) throw FflaError("matrix-vector dimension mismatch");
  Vec y(A.rows, 0);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j)
      y[i] = F.add(y[i], F.mul(A.at(i, j), x[j]));
  return y;
}

Mat hstack(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw FflaError("hstack row mismatch");
  Mat C(A.rows, A.cols + B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

Mat vstack(const Mat& A, const Mat& B) {
  if (A.cols != B.cols) throw FflaError("vstack col mismatch");
  Mat C(A.rows + B.rows, A.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
  for (std::size_t i = 0; i < B.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
  return C;
}

Rref rref(const Fp& F, Mat A) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t piv = r;
    while (piv < A.rows && A.at(piv, c) == 0) ++piv;
    if (piv == A.rows) continue;
    for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(r, j), A.at(piv, j));
    u64 inv = F.inv(A.at(r, c));
    for (std::size_t j = 0; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r || A.at(i, c) == 0) continue;
      u64 f = A.at(i, c);
      for (std::size_t j = 0; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(A);
  return out;
}

std::size_t rank(const Fp& F, const Mat& A) { return rref(F, A).pivots.size(); }

std::vector<Vec> kernel_basis(const Fp& F, const Mat& A) {
  Rref R = rref(F, A);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : R.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < A.cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(A.cols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < R.pivots.size(); ++i)
      v[R.pivots[i]] = F.neg(R.m.at(i, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Fp& F, const Mat& A, const Vec& b) {
  if (b.size() != A.rows) throw FflaError("solve: rhs dimension mismatch");
  Mat Ab(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) Ab.at(i, j) = A.at(i, j);
    Ab.at(i, A.cols) = b[i];
  }
  Rref R = rref(F, std::move(Ab));
  for (auto c : R.pivots)
    if (c == A.cols) return std::nullopt; // inconsistent row
  Vec x(A.cols, 0);
  for (std::size_t i = 0; i < R.pivots.size(); ++i)
    x[R.pivots[i]] = R.m.at(i, A.cols);
  return x;
}

std::optional<Mat> solve_mat(const Fp& F, const Mat& A, const Mat& B) {
  if (B.rows != A.rows) throw FflaError("solve_mat: rhs dimension mismatch");
  Mat X(A.cols, B.cols);
  for (std::size_t j = 0; j < B.cols; ++j) {
    Vec b(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) b[i] = B.at(i, j);
    auto x = solve(F, A, b);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < A.cols; ++i) X.at(i, j) = (*x)[i];
  }
  return X;
}

bool is_invertible(const Fp& F, const Mat& A) {
  return A.rows == A.cols && rank(F, A) == A.rows;
}

std::optional<Mat> inverse(const Fp& F, const Mat& A) {
  if (A.rows != A.cols) return std::nullopt;
  auto X = solve_mat(F, A, Mat::identity(A.rows));
  if (!X) return std::nullopt;
  if (mul(F, A, *X) != Mat::identity(A.rows)) return std::nullopt;
  return X;
}

bool SpanForm::insert(Vec v) {
  if (v.size() != n_) throw FflaError("SpanForm: ambient dimension mismatch");
  v = residue(std::move(v));
  std::size_t piv = 0;
  while (piv < n_ && v[piv] == 0) ++piv;
  if (piv == n_) return false;
  u64 inv = F_->inv(v[piv]);
  for (auto& e : v) e = F_->mul(e, inv);
  // keep existing rows reduced against the new one
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    u64 f = rows_[r][piv];
    if (!f) continue;
    for (std::size_t j = 0; j < n_; ++j)
      rows_[r][j] = F_->sub(rows_[r][j], F_->mul(f, v[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

Vec SpanForm::residue(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    u64 f = v[pivots_[r]];
    if (!f) continue;
    for (std::size_t j = 0; j < n_; ++j)
      v[j] = F_->sub(v[j], F_->mul(f, rows_[r][j]));
  }
  return v;
}

bool SpanForm::contains(const Vec& v) const {
  Vec r = residue(v);
  return std::all_of(r.begin(), r.end(), [](u64 x) { return x == 0; });
}

// ---- polynomial helpers ----

static void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Fp& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return c;
}

Poly poly_mod(const Fp& F, Poly a, const Poly& m) {
  poly_trim(a);
  Poly mm = m;
  poly_trim(mm);
  if (mm.empty()) throw FflaError("poly_mod by zero");
  u64 lead_inv = F.inv(mm.back());
  while (a.size() >= mm.size()) {
    u64 f = F.mul(a.back(), lead_inv);
    std::size_t off = a.size() - mm.size();
    for (std::size_t j = 0; j < mm.size(); ++j)
      a[off + j] = F.sub(a[off + j], F.mul(f, mm[j]));
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

PolyDivMod poly_divmod(const Fp& F, Poly a, const Poly& b) {
  poly_trim(a);
  Poly den = b;
  poly_trim(den);
  if (den.empty()) throw FflaError("polynomial division by zero");
  PolyDivMod out;
  if (a.size() < den.size()) {
    out.r = std::move(a);
    return out;
  }
  out.q.assign(a.size() - den.size() + 1, 0);
  u64 li = F.inv(den.back());
  while (a.size() >= den.size()) {
    u64 f = F.mul(a.back(), li);
    std::size_t off = a.size() - den.size();
    out.q[off] = f;
    for (std::size_t j = 0; j < den.size(); ++j)
      a[off + j] = F.sub(a[off + j], F.mul(f, den[j]));
    poly_trim(a);
    if (a.empty()) break;
  }
  out.r = std::move(a);
  poly_trim(out.q);
  return out;
}

PolyExtGcd poly_ext_gcd(const Fp& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{};
  Poly t0{}, t1{1};
  auto sub_scaled = [&](const Poly& x, const Poly& q, const Poly& y) {
    Poly qy = poly_mul(F, q, y);
    Poly r = x;
    if (r.size() < qy.size()) r.resize(qy.size(), 0);
    for (std::size_t i = 0; i < qy.size(); ++i) r[i] = F.sub(r[i], qy[i]);
    poly_trim(r);
    return r;
  };
  poly_trim(r0);
  poly_trim(r1);
  while (!r1.empty()) {
    PolyDivMod d = poly_divmod(F, r0, r1);
    Poly r2 = d.r;
    Poly s2 = sub_scaled(s0, d.q, s1);
    Poly t2 = sub_scaled(t0, d.q, t1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {r0, s0, t0};
}

Poly poly_gcd(const Fp& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

static Poly poly_powmod(const Fp& F, Poly base, u64 e, const Poly& m) {
  Poly r{1};
  base = poly_mod(F, std::move(base), m);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), m);
    base = poly_mod(F, poly_mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

Poly poly_xq_pow_mod(const Fp& F, const Poly& m, unsigned k) {
  Poly x{0, 1};
  Poly r = poly_mod(F, x, m);
  for (unsigned i = 0; i < k; ++i) r = poly_powmod(F, r, F.p(), m);
  return r;
}

Mat poly_eval_mat(const Fp& F, const Poly& f, const Mat& A) {
  Mat R(A.rows, A.rows);
  Mat P = Mat::identity(A.rows);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i]) R = add(F, R, scale(F, f[i], P));
    if (i + 1 < f.size()) P = mul(F, P, A);
  }
  return R;
}

Poly minimal_polynomial(const Fp& F, const Mat& A) {
  if (A.rows != A.cols) throw FflaError("minimal_polynomial: square matrix required");
  std::size_t n = A.rows;
  // Grow the span of I, A, A^2, ... until dependence; the first linear
  // relation gives the minimal polynomial of the sequence of powers.
  std::vector<Mat> pows;
  SpanForm span(F, n * n);
  Mat P = Mat::identity(n);
  while (true) {
    Vec flat = P.a;
    if (!span.contains(flat)) {
      span.insert(flat);
      pows.push_back(P);
      P = mul(F, P, A);
      continue;
    }
    // express P in terms of earlier powers
    std::size_t k = pows.size();
    Mat sys(n * n, k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < n * n; ++i) sys.at(i, c) = pows[c].a[i];
    auto coeffs = solve(F, sys, flat);
    if (!coeffs) throw FflaError("minimal_polynomial: inconsistent span");
    Poly m(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) m[i] = F.neg((*coeffs)[i]);
    m[k] = 1;
    return m;
  }
}

static Poly poly_derivative(const Fp& F, const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], F.reduce(static_cast<long long>(i))));
  poly_trim(d);
  return d;
}

static Poly poly_div_exact(const Fp& F, const Poly& a, const Poly& b) {
  PolyDivMod d = poly_divmod(F, a, b);
  if (!d.r.empty()) throw FflaError("inexact polynomial division");
  return d.q;
}

// Splits the squarefree polynomial `sf`, all of whose irreducible
// factors have degree d, into those factors (Cantor-Zassenhaus).
static void equal_degree_split(const Fp& F, Poly sf, unsigned d, std::vector<Poly>& out,
                               std::mt19937_64& rng) {
  poly_trim(sf);
  if (sf.size() <= 1) return;
  if (sf.size() - 1 == d) {
    u64 inv = F.inv(sf.back());
    for (auto& c : sf) c = F.mul(c, inv);
    out.push_back(sf);
    return;
  }
  if (d > 9) throw FflaError("factor degree too large for the splitting exponent");
  u64 q = 1;
  for (unsigned i = 0; i < d; ++i) q *= F.p();
  u64 e = (q - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly h(sf.size() - 1);
    for (auto& c : h) c = dist(rng);
    poly_trim(h);
    if (h.empty()) continue;
    Poly g = poly_gcd(F, sf, h);
    if (g.size() > 1 && g.size() < sf.size()) {
      equal_degree_split(F, g, d, out, rng);
      equal_degree_split(F, poly_div_exact(F, sf, g), d, out, rng);
      return;
    }
    Poly w = poly_powmod(F, h, e, sf);
    if (w.empty()) continue;
    w[0] = F.sub(w[0], 1);
    poly_trim(w);
    Poly g2 = poly_gcd(F, sf, w);
    if (g2.size() > 1 && g2.size() < sf.size()) {
      equal_degree_split(F, g2, d, out, rng);
      equal_degree_split(F, poly_div_exact(F, sf, g2), d, out, rng);
      return;
    }
  }
  throw FflaError("equal degree splitting failed");
}

std::vector<Poly> coprime_split(const Fp& F, const Poly& m) {
  Poly mm = m;
  poly_trim(mm);
  if (mm.size() <= 1) return {};
  if (mm.size() - 1 >= F.p()) throw FflaError("degree too large relative to the characteristic");
  u64 inv = F.inv(mm.back());
  for (auto& c : mm) c = F.mul(c, inv);
  // squarefree part (derivative is nonzero since deg < p)
  Poly der = poly_derivative(F, mm);
  Poly sf = (der.empty()) ? mm : poly_div_exact(F, mm, poly_gcd(F, mm, der));
  poly_trim(sf);
  // distinct-degree stage on the squarefree part
  std::vector<std::pair<Poly, unsigned>> groups;
  Poly rest = sf;
  unsigned maxd = static_cast<unsigned>(sf.size() - 1);
  Poly frob = poly_mod(F, Poly{0, 1}, rest);
  for (unsigned d = 1; d <= maxd && rest.size() > 1; ++d) {
    frob = poly_powmod(F, frob, F.p(), rest);
    Poly t = frob;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = F.sub(t[1], 1);
    poly_trim(t);
    Poly g = poly_gcd(F, rest, t);
    if (g.size() > 1) {
      groups.emplace_back(g, d);
      rest = poly_div_exact(F, rest, g);
      poly_trim(rest);
      if (rest.size() > 1) frob = poly_mod(F, frob, rest);
    }
  }
  if (rest.size() > 1) groups.emplace_back(rest, static_cast<unsigned>(rest.size() - 1));
  // split same-degree groups into single irreducibles
  std::vector<Poly> irreducibles;
  std::mt19937_64 rng(0x5eed1234u ^ (mm.size() << 8));
  for (auto& [g, d] : groups) equal_degree_split(F, g, d, irreducibles, rng);
  if (irreducibles.size() <= 1) return {};
  // fold multiplicities of m back into each factor
  std::vector<Poly> parts;
  for (const auto& f : irreducibles) {
    Poly part{1};
    Poly cur = mm;
    while (true) {
      PolyDivMod dm = poly_divmod(F, cur, f);
      if (!dm.r.empty()) break;
      part = poly_mul(F, part, f);
      cur = dm.q;
    }
    parts.push_back(part);
  }
  return parts;
}

bool poly_irreducible(const Fp& F, const Poly& m) {
  Poly mm = m;
  poly_trim(mm);
  if (mm.size() <= 1) return false;
  unsigned d = static_cast<unsigned>(mm.size() - 1);
  if (d == 1) return true;
  // Rabin test: x^{p^d} == x mod m, and gcd(x^{p^{d/q}} - x, m) = 1 for
  // every prime q | d.
  Poly xq = poly_xq_pow_mod(F, mm, d);
  Poly x{0, 1};
  Poly diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = F.sub(diff[1], 1);
  poly_trim(diff);
  if (!diff.empty()) return false;
  for (unsigned q = 2; q <= d; ++q) {
    if (d % q) continue;
    bool isp = true;
    for (unsigned t = 2; t * t <= q; ++t)
      if (q % t == 0) { isp = false; break; }
    if (!isp) continue;
    Poly xr = poly_xq_pow_mod(F, mm, d / q);
    Poly t = xr;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = F.sub(t[1], 1);
    poly_trim(t);
    Poly g = poly_gcd(F, mm, t);
    if (g.size() > 1) return false;
  }
  return true;
}

} // namespace arcomp::ffla
