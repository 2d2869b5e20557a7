#pragma once

#include "gcoh/linalg/int_matrix.hpp"

namespace gcoh::linalg {

/// Result of smith_normal_form. Convention: u * a * v == d, with u and v
/// unimodular and d diagonal satisfying d(0,0) | d(1,1) | ... >= 1 on the
/// first `rank` entries, zero afterwards.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  int rank = 0;
};

/// Deterministic Smith normal form over the integers. Pivot selection is
/// smallest nonzero absolute value with row-major tie-break, so equal inputs
/// give identical decompositions across runs.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace gcoh::linalg
