#pragma once

#include <string>

#include "gcoh/cohomology/long_exact.hpp"
#include "gcoh/groups/finite_group.hpp"

namespace gcoh::sha {

using cohomology::CohomologyClass;
using cohomology::CohomPtr;
using cohomology::ResourceGuard;
using gmod::ModulePtr;
using groups::GroupPtr;
using linalg::FinAbGroup;

/// The subgroup of H^1(G, M) of classes restricting to zero on every cyclic
/// subgroup, presented with lifted generators.
struct ShaGroup {
  CohomPtr ambient;
  FinAbGroup subgroup;
  std::vector<CohomologyClass> generators;
};

/// Kernel of the stacked restriction maps H^1(G, M) -> prod H^1(<g>, M),
/// computed as one linear system over the invariant factors.
ShaGroup sha1_omega(const GroupPtr& g, const ModulePtr& m, const ResourceGuard& guard = {});

/// Mechanical certificate for the closed form: over the augmentation
/// sequence 1 -> H' -> (Z/n)[G] -> Z/n -> 1, the kernel-of-restrictions
/// subgroup of H^1(G, H') is cyclic of order N/N' with N = gcd(n, |G|),
/// N' = gcd(n, exp G), generated by the connecting image of exp G.
/// Fail-closed: each flag reports the engine's own comparison.
struct ShaCertificate {
  std::string group_name;
  std::int64_t n = 1;
  std::int64_t gcd_order = 1;     // N = gcd(n, |G|)
  std::int64_t gcd_exponent = 1;  // N' = gcd(n, exp G)
  FinAbGroup sha_invariants;
  bool order_matches = false;
  bool cyclic = false;
  bool generator_ok = false;
  double elapsed_ms = 0.0;
  std::string details;

  bool ok() const { return order_matches && cyclic && generator_ok; }
};

ShaCertificate propdata_certificate(const GroupPtr& g, std::int64_t n,
                                    const ResourceGuard& guard = {});

/// JSON rendering of a certificate (single object, stable key order).
std::string certificate_to_json(const ShaCertificate& c);

}  // namespace gcoh::sha
