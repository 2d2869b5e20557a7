#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcoh/groups/finite_group.hpp"
#include "gcoh/linalg/mod_engine.hpp"

namespace gcoh::gmod {

using groups::GroupPtr;
using groups::Subgroup;
using linalg::Mat64;
using linalg::Vec64;

/// Coset bookkeeping for modules built by induced_module (and regular_module,
/// which is the special case of the trivial subgroup). shapiro() requires it.
struct InducedStructure {
  Subgroup delta;
  std::vector<int> coset_of;   // parent element -> coset index
  std::vector<int> coset_rep;  // coset index -> smallest member
  int identity_coset = 0;
};

/// Free Z/n-module of finite rank with a left action of a finite group by
/// invertible matrices. Validated on construction, immutable afterwards.
struct GModule {
  GroupPtr group;
  std::int64_t modulus = 1;  // n >= 1; n = 1 gives the zero module
  int rank = 0;
  std::vector<Mat64> action;  // one rank x rank matrix per group element
  std::string name;
  std::optional<InducedStructure> induced;

  const Mat64& act(int g) const { return action[g]; }
};

using ModulePtr = std::shared_ptr<const GModule>;

/// Validates action(identity) = I, the homomorphism law on all pairs, and
/// invertibility (via the inverse element's matrix); throws ValidationError.
ModulePtr make_module(GroupPtr g, std::int64_t n, int rank, std::vector<Mat64> action,
                      std::string name, std::optional<InducedStructure> induced = std::nullopt);

/// Content equality: same group object, modulus, rank and action tables.
bool same_module(const GModule& a, const GModule& b);

ModulePtr trivial_module(const GroupPtr& g, std::int64_t n, int rank);
/// (Z/n)[G] with the left-translation permutation action.
ModulePtr regular_module(const GroupPtr& g, std::int64_t n);
/// Free module on the left cosets G/delta with the translation action.
ModulePtr induced_module(const GroupPtr& g, const Subgroup& delta, std::int64_t n);

/// The module restricted to a subgroup (same rank, action at member elements).
ModulePtr restrict_module(const ModulePtr& m, const groups::SubgroupGroup& sub);

/// G-invariant bilinear form left x right -> Z/n, value <a,b> = a^T P b.
struct Pairing {
  ModulePtr left;
  ModulePtr right;
  Mat64 matrix;  // left.rank x right.rank
  bool perfect = false;
};

/// Validates invariance (and the perfect flag when requested).
Pairing make_pairing(ModulePtr left, ModulePtr right, Mat64 p, bool require_perfect);

/// Contragredient dual: same rank, action(g) = transpose(action(g^-1)),
/// together with the evaluation pairing (dual x original), which is perfect.
std::pair<ModulePtr, Pairing> dual_module(const ModulePtr& m);

}  // namespace gcoh::gmod
