#pragma once

#include <optional>
#include <string>

#include "gcoh/cohomology/maps.hpp"
#include "gcoh/linalg/abelian_hom.hpp"

namespace gcoh::cohomology {

using linalg::AbelianHom;

/// The long exact cohomology sequence of a short exact sequence of modules,
/// assembled through degree r_max:
///   H^r(A) -> H^r(B) -> H^r(C) -> H^{r+1}(A),   r = 0..r_max,
/// with im = ker verified at every node of that range by exact linear
/// algebra on coordinates. H^{r_max+1}(A) and the final connecting matrix
/// are materialized when the closing coboundary matrix fits the guard;
/// otherwise the final node is still verified exactly, by deciding
/// coboundary questions against the factored differential one degree up.
struct LesAssembly {
  std::vector<CohomPtr> h_a, h_b, h_c;        // degrees 0..r_max
  std::optional<CohomPtr> h_a_top;            // H^{r_max+1}(A) when materialized
  std::vector<AbelianHom> push_ab, push_bc;   // degrees 0..r_max
  std::vector<AbelianHom> delta;              // 0..r_max-1, plus r_max when materialized

  struct Node {
    std::string name;
    bool exact = false;
  };
  std::vector<Node> nodes;
  bool all_exact = false;
};

LesAssembly long_exact_sequence(const gmod::ShortExactSequence& s, int r_max,
                                const ResourceGuard& guard = {});

/// Coordinate matrix of a class-level map between two computed groups,
/// evaluated on the source generators.
template <typename F>
AbelianHom hom_on_generators(const CohomPtr& src, const CohomPtr& dst, F&& map) {
  AbelianHom h;
  h.source = src->presentation();
  h.target = dst->presentation();
  const int k = static_cast<int>(h.source.invariant_factors.size());
  const int l = static_cast<int>(h.target.invariant_factors.size());
  h.mat = linalg::Mat64(l, k);
  for (int i = 0; i < k; ++i) {
    Vec64 unit(k, 0);
    unit[i] = 1;
    CohomologyClass img = map(make_class(src, std::move(unit)));
    for (int j = 0; j < l; ++j) h.mat.at(j, i) = img.coords[j];
  }
  h.validate();
  return h;
}

}  // namespace gcoh::cohomology
