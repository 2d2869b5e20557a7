#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "gcoh/linalg/fin_ab_group.hpp"
#include "gcoh/linalg/int_matrix.hpp"

namespace gcoh::linalg {

/// Dense matrix of machine integers, row-major. Used for arithmetic in Z/n
/// where every intermediate value is exactly representable; the engine
/// guards n <= 2^31 so products of two residues never overflow.
struct Mat64 {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  Mat64() = default;
  Mat64(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  Mat64(std::initializer_list<std::initializer_list<std::int64_t>> init);

  static Mat64 identity(int k);

  std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const Mat64& o) const = default;

  /// Append the columns of `o` on the right (row counts must match).
  void hcat(const Mat64& o);

  Mat64 transposed() const;
};

using Vec64 = std::vector<std::int64_t>;

/// Canonical representative of x mod n in [0, n).
std::int64_t mod_reduce(std::int64_t x, std::int64_t n);

Mat64 mul_mod(const Mat64& a, const Mat64& b, std::int64_t n);
Vec64 mul_mod(const Mat64& a, const Vec64& x, std::int64_t n);
Mat64 reduce_mod(const Mat64& a, std::int64_t n);
bool is_zero_mod(const Mat64& a, std::int64_t n);
/// True when the square matrix is invertible over Z/n.
bool invertible_mod(const Mat64& a, std::int64_t n);

Mat64 to_mat64_mod(const IntMatrix& a, std::int64_t n);
IntMatrix to_int_matrix(const Mat64& a);

/// Smith elimination of a matrix viewed over Z/n. All intermediates are
/// symmetric residues, so the computation is exact. diag holds canonical
/// representatives in [0, n); its entries form a divisibility chain and the
/// cyclic order attached to row/column i is gcd(diag[i], n). Rows or columns
/// beyond diag.size() behave as diagonal zero.
struct ModSmith {
  std::vector<std::int64_t> diag;
  Mat64 v;     // tracked when requested; columns transform the source side
  Mat64 u;     // row transform
  Mat64 uinv;  // inverse row transform
};

ModSmith mod_smith(Mat64 a, std::int64_t n, bool want_v, bool want_u, bool want_uinv);

/// Factor once, then answer many questions about a*x == b (mod n). The row
/// transform is kept as an operation log, so memory stays proportional to
/// the work done rather than rows^2.
class ModSolver {
public:
  ModSolver() = default;
  ModSolver(const Mat64& a, std::int64_t n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Canonical solution of a*x == b (free parameters zero, bound
  /// coordinates minimal nonnegative), or nullopt. Deterministic.
  std::optional<Vec64> solve(const Vec64& b) const;

  /// Generators (columns) of {x : a*x == 0 (mod n)}.
  Mat64 kernel() const;

  /// Order of the column span of a inside (Z/n)^rows.
  mpz_class span_order() const;

private:
  struct RowOp {
    std::int8_t kind;  // 0 swap(i,j), 1 row_i -= q*row_j, 2 negate row i
    int i = 0, j = 0;
    std::int64_t q = 0;
  };

  std::int64_t n_ = 1;
  int rows_ = 0, cols_ = 0;
  std::vector<RowOp> log_;
  std::vector<std::int64_t> diag_;
  Mat64 v_;

  friend struct Eliminator;
};

/// One-shot conveniences built on ModSolver.
Mat64 kernel_mod(const Mat64& a, std::int64_t n);
mpz_class span_order_mod(const Mat64& a, std::int64_t n);
std::optional<Vec64> solve_mod(const Mat64& a, const Vec64& b, std::int64_t n);
std::optional<Vec64> solve_mod(const IntMatrix& a, const Vec64& b, std::int64_t n);

/// Presentation of span(Z)/span(B) inside (Z/n)^k, Z and B given by columns.
/// Construction rejects inputs where span(B) is not contained in span(Z).
class SubquotientPresentation {
public:
  SubquotientPresentation() = default;

  const FinAbGroup& group() const { return group_; }
  /// Representative ambient vectors, one column per invariant factor.
  const Mat64& generators() const { return gens_; }

  /// Coordinates of an ambient vector in the presentation, reduced mod the
  /// invariant factors. nullopt when the vector lies outside span(Z).
  std::optional<Vec64> coords(const Vec64& v) const;

  std::int64_t modulus() const { return n_; }
  int ambient_dim() const { return ambient_; }

private:
  friend SubquotientPresentation subquotient(const Mat64&, const Mat64&, std::int64_t);

  std::int64_t n_ = 1;
  int ambient_ = 0;
  FinAbGroup group_;
  Mat64 gens_;
  ModSolver zsolver_;  // factorization of the cycle matrix
  Mat64 u_;            // row transform of the relation elimination
  std::vector<std::int64_t> factor_of_row_;
  std::vector<int> kept_;
};

SubquotientPresentation subquotient(const Mat64& z, const Mat64& b, std::int64_t n);
SubquotientPresentation subquotient(const IntMatrix& z, const IntMatrix& b, std::int64_t n);

}  // namespace gcoh::linalg
