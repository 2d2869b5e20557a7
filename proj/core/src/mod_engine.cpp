#include "gcoh/linalg/mod_engine.hpp"

#include <algorithm>
#include <numeric>

#include "gcoh/errors.hpp"

namespace gcoh::linalg {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

void check_modulus(std::int64_t n) {
  if (n < 1) throw ValidationError("modulus must be >= 1");
  if (n > kMaxModulus) throw ValidationError("modulus too large for the Z/n engine");
}

// Symmetric representative in (-n/2, n/2].
std::int64_t srem(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  if (r < 0) r += n;
  if (2 * r > n) r -= n;
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b); }

// Inverse of a mod m, gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = mod_reduce(a, m), t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  return mod_reduce(t0, m);
}

// Quotient of a by p minimizing the remainder in absolute value; ties keep
// the remainder nonnegative.
std::int64_t rounding_quotient(std::int64_t a, std::int64_t p) {
  std::int64_t q = a / p;
  std::int64_t r = a - q * p;
  if (r < 0) {
    q += (p > 0) ? -1 : 1;
    r = a - q * p;
  }
  std::int64_t ap = p < 0 ? -p : p;
  if (2 * r > ap) q += (p > 0) ? 1 : -1;
  return q;
}

}  // namespace

struct Eliminator {
  Mat64 d;
  std::int64_t n;
  bool want_v, want_u, want_uinv;
  Mat64 v, u, uinv;
  std::vector<ModSolver::RowOp>* log = nullptr;

  Eliminator(Mat64 a, std::int64_t mod, bool wv, bool wu, bool wui)
      : d(std::move(a)), n(mod), want_v(wv), want_u(wu), want_uinv(wui) {
    for (auto& e : d.a) e = srem(e, n);
    if (want_v) v = Mat64::identity(d.cols);
    if (want_u) u = Mat64::identity(d.rows);
    if (want_uinv) uinv = Mat64::identity(d.rows);
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    if (want_u)
      for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    if (want_uinv)
      for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    if (log) log->push_back({0, i, j, 0});
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    if (want_v)
      for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }

  // row i -= q * row j
  void row_axpy(int i, int j, std::int64_t q) {
    if (q == 0) return;
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = srem(d.at(i, c) - q * d.at(j, c), n);
    if (want_u)
      for (int c = 0; c < u.cols; ++c) u.at(i, c) = srem(u.at(i, c) - q * u.at(j, c), n);
    if (want_uinv)
      for (int r = 0; r < uinv.rows; ++r)
        uinv.at(r, j) = srem(uinv.at(r, j) + q * uinv.at(r, i), n);
    if (log) log->push_back({1, i, j, q});
  }

  // col i -= q * col j
  void col_axpy(int i, int j, std::int64_t q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows; ++r) d.at(r, i) = srem(d.at(r, i) - q * d.at(r, j), n);
    if (want_v)
      for (int r = 0; r < v.rows; ++r) v.at(r, i) = srem(v.at(r, i) - q * v.at(r, j), n);
  }

  void negate_row(int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = srem(-d.at(i, c), n);
    if (want_u)
      for (int c = 0; c < u.cols; ++c) u.at(i, c) = srem(-u.at(i, c), n);
    if (want_uinv)
      for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = srem(-uinv.at(r, i), n);
    if (log) log->push_back({2, i, 0, 0});
  }

  // Smallest nonzero absolute value, row-major tie-break. Early exit on the
  // first +-1, which that rule always selects when one exists.
  bool find_pivot(int t, int& pr, int& pc) const {
    pr = -1;
    std::int64_t best = 0;
    for (int r = t; r < d.rows; ++r)
      for (int c = t; c < d.cols; ++c) {
        std::int64_t av = d.at(r, c) < 0 ? -d.at(r, c) : d.at(r, c);
        if (av != 0 && (pr < 0 || av < best)) {
          pr = r;
          pc = c;
          best = av;
          if (best == 1) return true;
        }
      }
    return pr >= 0;
  }

  void run() {
    if (n == 1) return;
    const int steps = std::min(d.rows, d.cols);
    int t = 0;
    while (t < steps) {
      int pr, pc;
      if (!find_pivot(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool stable = false;
      while (!stable) {
        stable = true;
        for (int r = 0; r < d.rows; ++r) {
          if (r == t || d.at(r, t) == 0) continue;
          row_axpy(r, t, rounding_quotient(d.at(r, t), d.at(t, t)));
          if (d.at(r, t) != 0) {
            swap_rows(t, r);
            stable = false;
          }
        }
        for (int c = 0; c < d.cols; ++c) {
          if (c == t || d.at(t, c) == 0) continue;
          col_axpy(c, t, rounding_quotient(d.at(t, c), d.at(t, t)));
          if (d.at(t, c) != 0) {
            swap_cols(t, c);
            stable = false;
          }
        }
        if (!stable) continue;
        if (d.at(t, t) != 1 && d.at(t, t) != -1) {
          for (int r = t + 1; r < d.rows && stable; ++r)
            for (int c = t + 1; c < d.cols && stable; ++c)
              if (d.at(r, c) % d.at(t, t) != 0) {
                row_axpy(t, r, -1);
                stable = false;
              }
        }
      }
      if (d.at(t, t) < 0) negate_row(t);
      ++t;
    }
  }

  std::vector<std::int64_t> diagonal() const {
    const int m = std::min(d.rows, d.cols);
    std::vector<std::int64_t> out(m);
    for (int i = 0; i < m; ++i) out[i] = mod_reduce(d.at(i, i), n);
    return out;
  }
};

Mat64::Mat64(std::initializer_list<std::initializer_list<std::int64_t>> init) {
  rows = static_cast<int>(init.size());
  cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
  a.reserve(static_cast<std::size_t>(rows) * cols);
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols) throw ValidationError("Mat64: ragged initializer");
    for (auto x : row) a.push_back(x);
  }
}

Mat64 Mat64::identity(int k) {
  Mat64 m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

void Mat64::hcat(const Mat64& o) {
  if (rows != o.rows) throw ValidationError("Mat64::hcat: row mismatch");
  Mat64 out(rows, cols + o.cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.at(r, c) = at(r, c);
    for (int c = 0; c < o.cols; ++c) out.at(r, cols + c) = o.at(r, c);
  }
  *this = std::move(out);
}

Mat64 Mat64::transposed() const {
  Mat64 t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

Mat64 mul_mod(const Mat64& a, const Mat64& b, std::int64_t n) {
  check_modulus(n);
  if (a.cols != b.rows) throw ValidationError("mul_mod: dimension mismatch");
  Mat64 z(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      std::int64_t v = mod_reduce(a.at(i, k), n);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        z.at(i, j) = mod_reduce(z.at(i, j) + v * mod_reduce(b.at(k, j), n), n);
    }
  return z;
}

Vec64 mul_mod(const Mat64& a, const Vec64& x, std::int64_t n) {
  check_modulus(n);
  if (a.cols != static_cast<int>(x.size())) throw ValidationError("mul_mod: dimension mismatch");
  Vec64 y(a.rows, 0);
  for (int i = 0; i < a.rows; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k < a.cols; ++k)
      acc = mod_reduce(acc + mod_reduce(a.at(i, k), n) * mod_reduce(x[k], n), n);
    y[i] = acc;
  }
  return y;
}

Mat64 reduce_mod(const Mat64& a, std::int64_t n) {
  check_modulus(n);
  Mat64 z = a;
  for (auto& e : z.a) e = mod_reduce(e, n);
  return z;
}

bool is_zero_mod(const Mat64& a, std::int64_t n) {
  for (auto e : a.a)
    if (mod_reduce(e, n) != 0) return false;
  return true;
}

bool invertible_mod(const Mat64& a, std::int64_t n) {
  check_modulus(n);
  if (a.rows != a.cols) return false;
  ModSmith s = mod_smith(a, n, false, false, false);
  if (static_cast<int>(s.diag.size()) != a.rows) return a.rows == 0;
  for (auto dv : s.diag)
    if (gcd64(dv, n) != 1) return false;
  return true;
}

Mat64 to_mat64_mod(const IntMatrix& a, std::int64_t n) {
  check_modulus(n);
  Mat64 z(a.rows(), a.cols());
  mpz_class nz = n, r;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      mpz_fdiv_r(r.get_mpz_t(), a.at(i, j).get_mpz_t(), nz.get_mpz_t());
      z.at(i, j) = r.get_si();
    }
  return z;
}

IntMatrix to_int_matrix(const Mat64& a) {
  IntMatrix z(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) z.at(i, j) = static_cast<long>(a.at(i, j));
  return z;
}

ModSmith mod_smith(Mat64 a, std::int64_t n, bool want_v, bool want_u, bool want_uinv) {
  check_modulus(n);
  Eliminator e(std::move(a), n, want_v, want_u, want_uinv);
  e.run();
  ModSmith s;
  s.diag = e.diagonal();
  s.v = std::move(e.v);
  s.u = std::move(e.u);
  s.uinv = std::move(e.uinv);
  return s;
}

ModSolver::ModSolver(const Mat64& a, std::int64_t n) : n_(n), rows_(a.rows), cols_(a.cols) {
  check_modulus(n);
  Eliminator e(a, n, true, false, false);
  e.log = &log_;
  e.run();
  diag_ = e.diagonal();
  v_ = std::move(e.v);
}

std::optional<Vec64> ModSolver::solve(const Vec64& b) const {
  if (static_cast<int>(b.size()) != rows_) throw ValidationError("ModSolver: rhs size mismatch");
  if (n_ == 1) return Vec64(cols_, 0);
  Vec64 c = b;
  for (auto& e : c) e = srem(e, n_);
  for (const auto& op : log_) {
    switch (op.kind) {
      case 0: std::swap(c[op.i], c[op.j]); break;
      case 1: c[op.i] = srem(c[op.i] - op.q * c[op.j], n_); break;
      default: c[op.i] = srem(-c[op.i], n_); break;
    }
  }
  Vec64 y(cols_, 0);
  const int m = std::min(rows_, cols_);
  for (int i = 0; i < m; ++i) {
    std::int64_t dv = diag_[i];
    std::int64_t g = gcd64(dv, n_);
    std::int64_t ci = mod_reduce(c[i], n_);
    if (ci % g != 0) return std::nullopt;
    std::int64_t period = n_ / g;
    y[i] = period == 1 ? 0 : mod_reduce((ci / g) * mod_inverse(dv / g, period), period);
  }
  for (int i = m; i < rows_; ++i)
    if (mod_reduce(c[i], n_) != 0) return std::nullopt;
  return mul_mod(v_, y, n_);
}

Mat64 ModSolver::kernel() const {
  Mat64 gens(cols_, 0);
  if (n_ == 1) return gens;
  for (int j = 0; j < cols_; ++j) {
    std::int64_t dv = j < static_cast<int>(diag_.size()) ? diag_[j] : 0;
    std::int64_t scale = n_ / gcd64(dv, n_);
    if (scale % n_ == 0) continue;  // unit pivot: no kernel contribution
    Mat64 col(cols_, 1);
    bool nonzero = false;
    for (int i = 0; i < cols_; ++i) {
      col.at(i, 0) = mod_reduce(scale * v_.at(i, j), n_);
      nonzero |= col.at(i, 0) != 0;
    }
    if (nonzero) gens.hcat(col);
  }
  return gens;
}

mpz_class ModSolver::span_order() const {
  mpz_class order = 1;
  for (int i = 0; i < std::min(rows_, cols_); ++i)
    order *= n_ / gcd64(diag_[i], n_);
  return order;
}

Mat64 kernel_mod(const Mat64& a, std::int64_t n) { return ModSolver(a, n).kernel(); }

mpz_class span_order_mod(const Mat64& a, std::int64_t n) { return ModSolver(a, n).span_order(); }

std::optional<Vec64> solve_mod(const Mat64& a, const Vec64& b, std::int64_t n) {
  return ModSolver(a, n).solve(b);
}

std::optional<Vec64> solve_mod(const IntMatrix& a, const Vec64& b, std::int64_t n) {
  return solve_mod(to_mat64_mod(a, n), b, n);
}

std::optional<Vec64> SubquotientPresentation::coords(const Vec64& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw ValidationError("subquotient coords: dimension mismatch");
  if (n_ == 1) return Vec64{};
  auto x = zsolver_.solve(v);
  if (!x) return std::nullopt;
  Vec64 w = mul_mod(u_, *x, n_);
  Vec64 out;
  out.reserve(kept_.size());
  for (int i : kept_) out.push_back(mod_reduce(w[i], factor_of_row_[i]));
  return out;
}

SubquotientPresentation subquotient(const Mat64& z, const Mat64& b, std::int64_t n) {
  check_modulus(n);
  if (z.rows != b.rows) throw ValidationError("subquotient: ambient dimension mismatch");
  SubquotientPresentation p;
  p.n_ = n;
  p.ambient_ = z.rows;
  p.gens_ = Mat64(z.rows, 0);
  Mat64 zred = reduce_mod(z, n);
  p.zsolver_ = ModSolver(zred, n);
  if (n == 1) return p;

  // Coefficients of each boundary column in terms of the cycle columns.
  Mat64 rel(z.cols, b.cols);
  for (int c = 0; c < b.cols; ++c) {
    Vec64 col(b.rows);
    for (int r = 0; r < b.rows; ++r) col[r] = mod_reduce(b.at(r, c), n);
    auto x = p.zsolver_.solve(col);
    if (!x) throw ValidationError("subquotient: column of B outside span(Z)");
    for (int r = 0; r < z.cols; ++r) rel.at(r, c) = (*x)[r];
  }
  // Relations among the cycle generators themselves.
  rel.hcat(p.zsolver_.kernel());

  ModSmith s = mod_smith(rel, n, false, true, true);
  p.u_ = std::move(s.u);
  p.factor_of_row_.resize(z.cols);
  for (int i = 0; i < z.cols; ++i) {
    std::int64_t dv = i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0;
    p.factor_of_row_[i] = gcd64(dv, n);
    if (p.factor_of_row_[i] > 1) p.kept_.push_back(i);
  }
  for (int i : p.kept_) p.group_.invariant_factors.push_back(p.factor_of_row_[i]);
  p.group_.validate();

  for (int i : p.kept_) {
    Vec64 w(z.cols);
    for (int r = 0; r < z.cols; ++r) w[r] = s.uinv.at(r, i);
    Vec64 g = mul_mod(zred, w, n);
    Mat64 gc(z.rows, 1);
    for (int r = 0; r < z.rows; ++r) gc.at(r, 0) = g[r];
    p.gens_.hcat(gc);
  }
  return p;
}

SubquotientPresentation subquotient(const IntMatrix& z, const IntMatrix& b, std::int64_t n) {
  return subquotient(to_mat64_mod(z, n), to_mat64_mod(b, n), n);
}

}  // namespace gcoh::linalg
