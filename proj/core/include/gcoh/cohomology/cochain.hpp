#pragma once

#include <cstdint>
#include <vector>

#include "gcoh/gmod/gmodule.hpp"

namespace gcoh::cohomology {

using gmod::GModule;
using gmod::ModulePtr;
using groups::GroupPtr;
using linalg::Vec64;

/// Inhomogeneous cochain: a table of module vectors indexed by r-tuples of
/// group elements, flattened row-major (tuple first, then the module
/// coordinate). Degree 0 is a single module vector.
struct Cochain {
  GroupPtr group;
  ModulePtr module;
  int degree = 0;
  Vec64 table;

  bool is_zero() const;
};

/// Number of table entries: |G|^degree * rank.
std::int64_t cochain_dim(const GModule& m, int degree);

Cochain zero_cochain(const GroupPtr& g, const ModulePtr& m, int degree);

/// Offset of the value block for a tuple (g_1, ..., g_r).
std::size_t tuple_offset(int group_size, const std::vector<int>& tuple, int rank);

Cochain add(const Cochain& a, const Cochain& b);
Cochain subtract(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, std::int64_t s);

/// The inhomogeneous coboundary
///   (dc)(g_1,...,g_{r+1}) = g_1.c(g_2,...,g_{r+1})
///     + sum_{i=1..r} (-1)^i c(g_1,...,g_i g_{i+1},...,g_{r+1})
///     + (-1)^{r+1} c(g_1,...,g_r).
Cochain coboundary(const Cochain& c);

}  // namespace gcoh::cohomology
