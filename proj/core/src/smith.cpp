#include "gcoh/linalg/smith.hpp"

#include <cstdlib>

namespace gcoh::linalg {

namespace {

// Quotient of a by p minimizing |a - q*p|; on a tie the remainder is kept
// nonnegative. Deterministic for all sign combinations.
mpz_class rounding_quotient(const mpz_class& a, const mpz_class& p) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  // fdiv: r has the sign of p. Normalize to 0 <= r < |p| first.
  if (r < 0) {
    r -= p;  // p < 0 here, so this adds |p|
    q += 1;
  }
  mpz_class abs_p = abs(p);
  if (2 * r > abs_p) {
    q += (p > 0) ? 1 : -1;
  }
  return q;
}

struct PivotPos {
  int r = -1;
  int c = -1;
};

PivotPos find_pivot(const IntMatrix& d, int t) {
  PivotPos best;
  mpz_class best_abs;
  for (int r = t; r < d.rows(); ++r)
    for (int c = t; c < d.cols(); ++c) {
      const mpz_class& v = d.at(r, c);
      if (v == 0) continue;
      mpz_class av = abs(v);
      if (best.r < 0 || av < best_abs) {
        best = {r, c};
        best_abs = av;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition s;
  s.u = IntMatrix::identity(a.rows());
  s.v = IntMatrix::identity(a.cols());
  s.d = a;
  IntMatrix& d = s.d;

  const int steps = std::min(a.rows(), a.cols());
  int t = 0;
  while (t < steps) {
    PivotPos p = find_pivot(d, t);
    if (p.r < 0) break;
    d.swap_rows(t, p.r);
    s.u.swap_rows(t, p.r);
    d.swap_cols(t, p.c);
    s.v.swap_cols(t, p.c);

    bool stable = false;
    while (!stable) {
      stable = true;
      // Clear column t with row operations.
      for (int r = 0; r < d.rows(); ++r) {
        if (r == t || d.at(r, t) == 0) continue;
        mpz_class q = rounding_quotient(d.at(r, t), d.at(t, t));
        d.row_axpy(r, t, q);
        s.u.row_axpy(r, t, q);
        if (d.at(r, t) != 0) {
          // Remainder is strictly smaller than the pivot: promote it.
          d.swap_rows(t, r);
          s.u.swap_rows(t, r);
          stable = false;
        }
      }
      // Clear row t with column operations.
      for (int c = 0; c < d.cols(); ++c) {
        if (c == t || d.at(t, c) == 0) continue;
        mpz_class q = rounding_quotient(d.at(t, c), d.at(t, t));
        d.col_axpy(c, t, q);
        s.v.col_axpy(c, t, q);
        if (d.at(t, c) != 0) {
          d.swap_cols(t, c);
          s.v.swap_cols(t, c);
          stable = false;
        }
      }
      if (!stable) continue;
      // Pivot must divide every remaining entry; if not, fold the offending
      // row into row t and resume clearing.
      for (int r = t + 1; r < d.rows() && stable; ++r)
        for (int c = t + 1; c < d.cols() && stable; ++c) {
          if (d.at(r, c) % d.at(t, t) != 0) {
            d.row_axpy(t, r, mpz_class(-1));
            s.u.row_axpy(t, r, mpz_class(-1));
            stable = false;
          }
        }
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

}  // namespace gcoh::linalg
