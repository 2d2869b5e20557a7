#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gcoh::linalg {

/// Finite abelian group presented by invariant factors: each entry >= 2 and
/// dividing the next, empty for the trivial group.
struct FinAbGroup {
  std::vector<std::int64_t> invariant_factors;

  mpz_class order() const {
    mpz_class o = 1;
    for (auto f : invariant_factors) o *= f;
    return o;
  }
  bool trivial() const { return invariant_factors.empty(); }
  bool cyclic() const { return invariant_factors.size() <= 1; }

  bool operator==(const FinAbGroup& o) const = default;

  /// Throws ValidationError if the divisibility chain is broken.
  void validate() const;

  std::string to_string() const;
};

}  // namespace gcoh::linalg
