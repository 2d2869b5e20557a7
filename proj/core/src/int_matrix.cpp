#include "gcoh/linalg/int_matrix.hpp"

#include <utility>

#include "gcoh/errors.hpp"

namespace gcoh::linalg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw ValidationError("IntMatrix: ragged initializer");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::row_axpy(int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

void IntMatrix::col_axpy(int i, int j, const mpz_class& q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw ValidationError("IntMatrix multiply: dimension mismatch");
  IntMatrix z(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const mpz_class& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols(); ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("determinant: matrix not square");
  const int k = a.rows();
  if (k == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (int t = 0; t < k - 1; ++t) {
    if (m.at(t, t) == 0) {
      int p = -1;
      for (int r = t + 1; r < k; ++r)
        if (m.at(r, t) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(t, p);
      sign = -sign;
    }
    for (int r = t + 1; r < k; ++r) {
      for (int c = t + 1; c < k; ++c) {
        mpz_class num = m.at(r, c) * m.at(t, t) - m.at(r, t) * m.at(t, c);
        mpz_divexact(m.at(r, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(r, t) = 0;
    }
    prev = m.at(t, t);
  }
  return sign * m.at(k - 1, k - 1);
}

}  // namespace gcoh::linalg
