#pragma once

#include <string>

#include "gcoh/gmod/gmodule.hpp"

namespace gcoh::gmod {

/// Equivariant Z/n-linear map between modules of the same group and modulus.
struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  Mat64 matrix;  // target.rank x source.rank
};

/// Validates equivariance (matrix * action_src(g) == action_tgt(g) * matrix)
/// and modulus agreement.
ModuleMap make_module_map(ModulePtr source, ModulePtr target, Mat64 matrix);

/// A -> B -> C with inj injective, surj surjective, im(inj) = ker(surj);
/// all three facts are established by exact linear algebra on construction.
struct ShortExactSequence {
  ModuleMap inj;   // A -> B
  ModuleMap surj;  // B -> C

  const ModulePtr& a() const { return inj.source; }
  const ModulePtr& b() const { return inj.target; }
  const ModulePtr& c() const { return surj.target; }
  std::int64_t modulus() const { return inj.source->modulus; }
};

ShortExactSequence make_short_exact(ModuleMap inj, ModuleMap surj);

/// 1 -> Z/n -> (Z/n)[G] -> H -> 1: the diagonal inclusion of the rank-one
/// trivial module into the regular module, with the quotient H realized as a
/// free module on the images of the basis vectors away from the identity.
ShortExactSequence diagonal_sequence(const GroupPtr& g, std::int64_t n);

/// 1 -> H' -> (Z/n)[G] -> Z/n -> 1: the all-ones augmentation with its
/// kernel H' on the basis e_g - e_identity, g != identity.
ShortExactSequence augmentation_sequence(const GroupPtr& g, std::int64_t n);

/// The perfect pairing H x H' -> Z/n descended from the dual-basis pairing
/// of the regular module; identity matrix in the bases fixed above.
Pairing descended_pairing(const ShortExactSequence& diag, const ShortExactSequence& aug);

/// Outcome of checking that the dual of the diagonal sequence is carried
/// onto the augmentation sequence by explicit equivariant isomorphisms.
struct DualityReport {
  bool ok = false;
  Mat64 iso_a;  // dual(A_diag) -> C_aug  (both rank-one trivial)
  Mat64 iso_b;  // dual(B_diag) -> B_aug
  Mat64 iso_c;  // dual(C_diag) -> A_aug  (H* -> H')
  std::string failure;  // first non-commuting square or failed axiom
};

DualityReport verify_duality(const GroupPtr& g, std::int64_t n);

}  // namespace gcoh::gmod
