#include "gcoh/linalg/fin_ab_group.hpp"

#include "gcoh/errors.hpp"

namespace gcoh::linalg {

void FinAbGroup::validate() const {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2)
      throw ValidationError("FinAbGroup: invariant factor < 2");
    if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
      throw ValidationError("FinAbGroup: divisibility chain broken");
  }
}

std::string FinAbGroup::to_string() const {
  if (trivial()) return "0";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(invariant_factors[i]);
  }
  return s;
}

}  // namespace gcoh::linalg
