#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gcoh::groups {

/// Finite group given by an explicit multiplication table over element
/// indices 0..size-1. Instances are validated on construction (see
/// build_group) and immutable afterwards; share freely across threads.
struct FiniteGroup {
  int size = 0;
  std::vector<int> cayley;  // flat size x size, cayley[g*size + h] = g*h
  int identity = 0;
  std::vector<int> inverses;
  std::vector<std::int64_t> element_orders;
  std::int64_t exponent = 1;
  std::string name;
  std::vector<std::string> element_labels;

  int op(int g, int h) const { return cayley[static_cast<std::size_t>(g) * size + h]; }
  int inv(int g) const { return inverses[g]; }
  /// g^k for k >= 0.
  int power(int g, std::int64_t k) const;
  const std::string& label(int g) const { return element_labels[g]; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates the table (associativity, identity, inverses) and fills in the
/// derived fields. Throws ValidationError naming the violated axiom and a
/// witness.
GroupPtr build_group(const std::vector<std::vector<int>>& cayley, std::string name = "",
                     std::vector<std::string> element_labels = {});

/// Subgroup of `parent` given by its sorted member indices.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, contains the identity

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_subgroup(const GroupPtr& g);
/// The cyclic subgroup generated by one element.
Subgroup cyclic_subgroup(const GroupPtr& g, int generator);
/// One entry per distinct subgroup <g>, g over all elements, deduplicated;
/// includes the trivial subgroup. Order: by subgroup size, then members.
std::vector<Subgroup> cyclic_subgroups(const GroupPtr& g);

/// Throws unless members are closed under product and inverse and contain
/// the identity.
void validate_subgroup(const Subgroup& s);

/// A subgroup repackaged as a FiniteGroup of its own, with the index
/// translation back to the parent.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<int> to_parent;  // local index -> parent index
  std::vector<int> from_parent;  // parent index -> local index or -1
};
SubgroupGroup subgroup_as_group(const Subgroup& s);

/// Surjective homomorphism onto the quotient by a normal subgroup.
struct QuotientMap {
  GroupPtr source;
  Subgroup normal_subgroup;
  GroupPtr target;
  std::vector<int> projection;  // source element -> target element
};

/// Throws with a conjugation witness when n is not normal in g.
QuotientMap quotient(const GroupPtr& g, const Subgroup& n);

}  // namespace gcoh::groups
