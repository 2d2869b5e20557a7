#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gcoh/cohomology/cochain.hpp"
#include "gcoh/linalg/mod_engine.hpp"

namespace gcoh::cohomology {

using linalg::FinAbGroup;
using linalg::Mat64;
using linalg::ModSolver;

/// Cap on |G|^(r+1) * rank, the coordinate count of the full complex one
/// degree above the one requested. Overridable per call and from the CLI.
struct ResourceGuard {
  std::int64_t max_entries = 2'000'000;
};

class CohomologyGroup;
using CohomPtr = std::shared_ptr<const CohomologyGroup>;

/// H^r(G, M) as an explicit finite abelian group: invariant factors,
/// representative cocycles for a generating set, and a coordinate procedure.
/// Internally computed on the normalized cochain complex; all public tables
/// are full cochain tables.
class CohomologyGroup {
public:
  const GroupPtr& group() const { return group_; }
  const ModulePtr& module() const { return module_; }
  int degree() const { return degree_; }
  std::int64_t modulus() const { return n_; }

  const FinAbGroup& presentation() const { return presentation_; }
  const std::vector<Cochain>& generators() const { return gens_; }

  /// Coordinates of a cocycle in the presentation; zero iff the cocycle is
  /// a coboundary. Throws ValidationError when the input is not a cocycle
  /// of this (G, M, r).
  Vec64 coordinates(const Cochain& z) const;

  /// Cocycle representative of a coordinate vector (linear combination of
  /// the stored generators).
  Cochain representative(const Vec64& coords) const;

  /// The coboundary matrix out of this degree on normalized cochains
  /// (rows: degree+1, cols: degree); used by the long-exact-sequence
  /// machinery to decide coboundary questions one degree up.
  const Mat64& boundary_out() const { return d_out_; }
  /// Lazily factored solver for boundary_out().
  const ModSolver& boundary_out_solver() const;

  /// Normalized coordinate vector of a cochain that already vanishes on
  /// identity-containing tuples; nullopt otherwise.
  std::optional<Vec64> extract_normalized(const Cochain& z) const;
  Cochain expand_normalized(const Vec64& v) const;

  std::int64_t normalized_dim(int deg) const;

private:
  friend CohomPtr cohomology_group(const GroupPtr&, const ModulePtr&, int, const ResourceGuard&);

  GroupPtr group_;
  ModulePtr module_;
  int degree_ = 0;
  std::int64_t n_ = 1;
  std::vector<int> nzelem_;  // non-identity elements in index order
  std::vector<int> nzidx_;   // element -> position in nzelem_, identity -> -1

  linalg::SubquotientPresentation sq_;
  FinAbGroup presentation_;
  std::vector<Cochain> gens_;
  Mat64 gens_norm_;  // normalized generator columns
  Mat64 d_out_;

  mutable std::mutex lazy_mu_;
  mutable std::optional<ModSolver> out_solver_;
  mutable std::optional<Mat64> norm_system_;
  mutable std::optional<ModSolver> norm_solver_;

  Vec64 normalized_vector_of(const Cochain& z) const;
  void build_norm_system() const;  // callers hold lazy_mu_
};

CohomPtr cohomology_group(const GroupPtr& g, const ModulePtr& m, int degree,
                          const ResourceGuard& guard = {});

/// Element of a CohomologyGroup, stored by coordinates in the presentation.
/// Equality of classes is equality of coordinates; representatives are
/// never compared directly.
struct CohomologyClass {
  CohomPtr parent;
  Vec64 coords;

  bool is_zero() const;
  std::int64_t order() const;
  Cochain representative() const { return parent->representative(coords); }
};

CohomologyClass make_class(CohomPtr parent, Vec64 coords);
CohomologyClass class_of(const CohomPtr& parent, const Cochain& cocycle);
CohomologyClass add(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass scale(const CohomologyClass& a, std::int64_t s);

/// The normalized coboundary matrix from degree r to r+1 (exposed for
/// cross-checks and tests).
Mat64 normalized_coboundary_matrix(const GroupPtr& g, const ModulePtr& m, int r);

/// Normalized coordinate vector of a cochain that vanishes on
/// identity-containing tuples, independent of any computed group; nullopt
/// when the cochain is not normalized.
std::optional<Vec64> normalized_table(const Cochain& z);

}  // namespace gcoh::cohomology
