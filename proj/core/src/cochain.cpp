#include "gcoh/cohomology/cochain.hpp"

#include "gcoh/errors.hpp"

namespace gcoh::cohomology {

using linalg::mod_reduce;

bool Cochain::is_zero() const {
  for (auto v : table)
    if (v != 0) return false;
  return true;
}

std::int64_t cochain_dim(const GModule& m, int degree) {
  std::int64_t d = m.rank;
  for (int i = 0; i < degree; ++i) {
    d *= m.group->size;
    if (d > (std::int64_t{1} << 40)) throw ResourceBoundError("cochain table too large");
  }
  return d;
}

Cochain zero_cochain(const GroupPtr& g, const ModulePtr& m, int degree) {
  if (degree < 0) throw ValidationError("cochain degree must be >= 0");
  Cochain c{g, m, degree, {}};
  c.table.assign(static_cast<std::size_t>(cochain_dim(*m, degree)), 0);
  return c;
}

std::size_t tuple_offset(int group_size, const std::vector<int>& tuple, int rank) {
  std::size_t idx = 0;
  for (int g : tuple) idx = idx * group_size + g;
  return idx * rank;
}

namespace {

void check_same_shape(const Cochain& a, const Cochain& b) {
  if (a.group != b.group || a.degree != b.degree || !gmod::same_module(*a.module, *b.module))
    throw ValidationError("cochain arithmetic: shape mismatch");
}

// Iterate all degree-length tuples over 0..k-1 in row-major order.
bool next_tuple(std::vector<int>& t, int k) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < k) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

Cochain add(const Cochain& a, const Cochain& b) {
  check_same_shape(a, b);
  Cochain out = a;
  const std::int64_t n = a.module->modulus;
  for (std::size_t i = 0; i < out.table.size(); ++i)
    out.table[i] = mod_reduce(out.table[i] + b.table[i], n);
  return out;
}

Cochain subtract(const Cochain& a, const Cochain& b) {
  check_same_shape(a, b);
  Cochain out = a;
  const std::int64_t n = a.module->modulus;
  for (std::size_t i = 0; i < out.table.size(); ++i)
    out.table[i] = mod_reduce(out.table[i] - b.table[i], n);
  return out;
}

Cochain scale(const Cochain& a, std::int64_t s) {
  Cochain out = a;
  const std::int64_t n = a.module->modulus;
  s = mod_reduce(s, n);
  for (auto& v : out.table) v = mod_reduce(v * s, n);
  return out;
}

Cochain coboundary(const Cochain& c) {
  const auto& g = *c.group;
  const auto& m = *c.module;
  const int k = g.size;
  const int rank = m.rank;
  const std::int64_t n = m.modulus;
  const int r = c.degree;

  Cochain out = zero_cochain(c.group, c.module, r + 1);
  if (rank == 0) return out;

  std::vector<int> t(r + 1, 0);
  std::vector<int> sub(r);
  do {
    std::size_t base = tuple_offset(k, t, rank);
    // g_1 . c(g_2, ..., g_{r+1})
    for (int i = 0; i < r; ++i) sub[i] = t[i + 1];
    std::size_t off = tuple_offset(k, sub, rank);
    const linalg::Mat64& rho = m.act(t[0]);
    for (int a = 0; a < rank; ++a) {
      std::int64_t acc = 0;
      for (int b = 0; b < rank; ++b)
        acc = mod_reduce(acc + rho.at(a, b) * c.table[off + b], n);
      out.table[base + a] = acc;
    }
    // alternating inner face maps
    std::int64_t sign = 1;
    for (int i = 1; i <= r; ++i) {
      sign = -sign;
      for (int j = 0, w = 0; j <= r; ++j) {
        if (j == i) continue;
        sub[w++] = (j == i - 1) ? g.op(t[i - 1], t[i]) : t[j];
      }
      off = tuple_offset(k, sub, rank);
      for (int a = 0; a < rank; ++a)
        out.table[base + a] = mod_reduce(out.table[base + a] + sign * c.table[off + a], n);
    }
    // (-1)^{r+1} c(g_1, ..., g_r)
    sign = -sign;
    for (int i = 0; i < r; ++i) sub[i] = t[i];
    off = tuple_offset(k, sub, rank);
    for (int a = 0; a < rank; ++a)
      out.table[base + a] = mod_reduce(out.table[base + a] + sign * c.table[off + a], n);
  } while (next_tuple(t, k));
  return out;
}

}  // namespace gcoh::cohomology
