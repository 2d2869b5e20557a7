#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace gcoh::linalg {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// All arithmetic on IntMatrix is exact; there is no overflow to silence.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int k);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpz_class& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const IntMatrix& o) const = default;

  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int i);
  /// row i -= q * row j
  void row_axpy(int i, int j, const mpz_class& q);
  /// col i -= q * col j
  void col_axpy(int i, int j, const mpz_class& q);

  IntMatrix transposed() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
mpz_class determinant(const IntMatrix& a);

}  // namespace gcoh::linalg
