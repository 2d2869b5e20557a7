#pragma once

#include "gcoh/cohomology/engine.hpp"
#include "gcoh/gmod/sequences.hpp"

namespace gcoh::cohomology {

using gmod::ModuleMap;
using gmod::Pairing;
using gmod::ShortExactSequence;
using groups::QuotientMap;
using groups::Subgroup;

/// Restriction to a fixed subgroup, reusable across classes of the same
/// source group.
struct Restriction {
  groups::SubgroupGroup sub;
  ModulePtr restricted_module;
  CohomPtr target;

  CohomologyClass apply(const CohomologyClass& x) const;
};

Restriction make_restriction(const CohomPtr& source, const Subgroup& delta,
                             const ResourceGuard& guard = {});

/// Convenience one-shot restriction.
CohomologyClass restrict_class(const CohomologyClass& x, const Subgroup& delta,
                               const ResourceGuard& guard = {});

/// Push a class through an equivariant map; target = H^r(G, f.target).
CohomologyClass pushforward(const ModuleMap& f, const CohomologyClass& x, const CohomPtr& target);
CohomologyClass pushforward(const ModuleMap& f, const CohomologyClass& x,
                            const ResourceGuard& guard = {});

/// Inflation along a quotient map, for modules where the kernel acts
/// trivially (checked). x lives over q.target, the result over q.source.
CohomologyClass inflate(const CohomologyClass& x, const QuotientMap& q, const ModulePtr& m,
                        const CohomPtr& target);
CohomologyClass inflate(const CohomologyClass& x, const QuotientMap& q, const ModulePtr& m,
                        const ResourceGuard& guard = {});

/// Connecting homomorphism of a short exact sequence: H^r(G, C) ->
/// H^{r+1}(G, A). The Z/n-linear (non-equivariant) section of surj defaults
/// to the canonical solver solution, making the output deterministic; the
/// resulting class is independent of that choice.
class ConnectingMap {
public:
  explicit ConnectingMap(ShortExactSequence s);
  ConnectingMap(ShortExactSequence s, Mat64 section);

  /// delta at the cochain level: a degree r cocycle over C to a degree r+1
  /// cocycle over A (inj^{-1} of the coboundary of the section lift).
  Cochain apply_cochain(const Cochain& rep) const;
  CohomologyClass apply(const CohomologyClass& x, const CohomPtr& target) const;

  const ShortExactSequence& sequence() const { return s_; }

private:
  ShortExactSequence s_;
  Mat64 section_;   // b.rank x c.rank, surj * section == I
  Mat64 left_inv_;  // a.rank x b.rank, left_inv * inj == I
};

CohomologyClass connecting(const ShortExactSequence& s, const CohomologyClass& x,
                           const CohomPtr& target);
CohomologyClass connecting(const ShortExactSequence& s, const CohomologyClass& x,
                           const ResourceGuard& guard = {});

/// Cup product H^p(G, M) x H^q(G, M') -> H^{p+q}(G, Z/n) along a pairing
/// into the trivial rank-one module:
///   (x u y)(g_1..g_{p+q}) = < x(g_1..g_p), (g_1...g_p) . y(g_{p+1}..) >.
CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y, const Pairing& p,
                    const CohomPtr& target);
CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y, const Pairing& p,
                    const ResourceGuard& guard = {});

/// Shapiro map H^r(G, Ind_D) -> H^r(D, Z/n): restrict a representative to
/// the subgroup and project onto the identity-coset coordinate. Rejects
/// modules not built by induced_module/regular_module.
struct ShapiroImage {
  groups::SubgroupGroup sub;
  CohomPtr target;
  CohomologyClass cls;
};
ShapiroImage shapiro(const CohomologyClass& x, const ResourceGuard& guard = {});

}  // namespace gcoh::cohomology
