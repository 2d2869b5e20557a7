#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcoh/groups/finite_group.hpp"

namespace gcoh::groups {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  GroupPtr group;
};

/// Product of cyclic groups Z/d1 x ... x Z/dk by componentwise addition.
GroupPtr cyclic_product(const std::vector<std::int64_t>& factors);
/// Dihedral group of order 2m (m >= 1): indices 0..m-1 are rotations r^i,
/// m..2m-1 are reflections s r^i.
GroupPtr dihedral_group(int m);
/// Quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion_group();
/// Symmetric group on 4 letters, permutations in lexicographic order.
GroupPtr symmetric4_group();

/// Named groups of order <= max_order: every abelian group (as a product of
/// cyclics in invariant-factor form), the dihedral groups D3..D6, Q8, and S4
/// once max_order >= 24. Deterministic order and stable names.
std::vector<CatalogEntry> catalog(int max_order);

/// Lookup by name or alias in catalog(max_order_hint); the hint is raised
/// automatically for known names that need it.
std::optional<GroupPtr> catalog_lookup(const std::string& name);

/// JSON group interchange: { "name": string, "size": k, "cayley": [[..]] }.
GroupPtr group_from_json(const std::string& json_text);
std::string group_to_json(const FiniteGroup& g);

}  // namespace gcoh::groups
