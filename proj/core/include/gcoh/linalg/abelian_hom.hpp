#pragma once

#include <cstdint>
#include <vector>

#include "gcoh/linalg/fin_ab_group.hpp"
#include "gcoh/linalg/mod_engine.hpp"

namespace gcoh::linalg {

/// Homomorphism between finite abelian groups in invariant-factor
/// coordinates: column i of mat gives the image of the i-th source
/// generator, read mod the target factors.
struct AbelianHom {
  FinAbGroup source;
  FinAbGroup target;
  Mat64 mat;  // target rank x source rank

  /// Throws ValidationError unless mat respects the factor annihilators
  /// (mat[j][i] * source_factor_i == 0 mod target_factor_j).
  void validate() const;

  bool is_zero() const;
  mpz_class image_order() const;
  mpz_class kernel_order() const;
};

AbelianHom compose(const AbelianHom& outer, const AbelianHom& inner);

/// im(incoming) == ker(outgoing), the long-exact-sequence node condition.
bool exact_pair(const AbelianHom& incoming, const AbelianHom& outgoing);

/// Kernel of a hom as a presented subgroup of the source: invariant factors
/// plus generator coordinate vectors (in source coordinates). ambient_n is a
/// modulus every source and target factor divides.
struct KernelSubgroup {
  FinAbGroup group;
  std::vector<Vec64> generator_coords;
};
KernelSubgroup kernel_subgroup(const AbelianHom& h, std::int64_t ambient_n);

/// Order of the subgroup generated by the given coordinate vectors inside a
/// presented group. ambient_n as above.
mpz_class generated_subgroup_order(const FinAbGroup& g, const std::vector<Vec64>& elems,
                                   std::int64_t ambient_n);

}  // namespace gcoh::linalg
