#include "gcoh/cohomology/engine.hpp"

#include <numeric>
#include <string>

#include "gcoh/errors.hpp"

namespace gcoh::cohomology {

using linalg::mod_reduce;

namespace {

std::int64_t pow_checked(std::int64_t base, int exp, std::int64_t cap) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

// Row-major index over normalized tuples (digits in 0..k-2).
std::size_t nz_index(const std::vector<int>& digits, int km1) {
  std::size_t idx = 0;
  for (int d : digits) idx = idx * km1 + d;
  return idx;
}

bool next_digits(std::vector<int>& t, int base) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

Mat64 normalized_coboundary_matrix(const GroupPtr& g, const ModulePtr& m, int r) {
  const int k = g->size;
  const int km1 = k - 1;
  const int rank = m->rank;
  const std::int64_t n = m->modulus;

  std::vector<int> nzelem;
  std::vector<int> nzidx(k, -1);
  for (int x = 0; x < k; ++x)
    if (x != g->identity) {
      nzidx[x] = static_cast<int>(nzelem.size());
      nzelem.push_back(x);
    }

  std::int64_t rows64 = rank, cols64 = rank;
  for (int i = 0; i < r + 1; ++i) rows64 *= km1;
  for (int i = 0; i < r; ++i) cols64 *= km1;
  Mat64 mat(static_cast<int>(rows64), static_cast<int>(cols64));
  if (rows64 == 0 || cols64 == 0 || rank == 0) return mat;

  std::vector<int> digs(r + 1, 0);
  std::vector<int> sub(r);
  do {
    const std::size_t row_base = nz_index(digs, km1) * rank;
    // g_1 . c(g_2, ..., g_{r+1})
    for (int i = 0; i < r; ++i) sub[i] = digs[i + 1];
    std::size_t col_base = nz_index(sub, km1) * rank;
    const Mat64& rho = m->act(nzelem[digs[0]]);
    for (int a = 0; a < rank; ++a)
      for (int b = 0; b < rank; ++b) {
        std::int64_t v = rho.at(a, b);
        if (v) mat.at(row_base + a, col_base + b) += v;
      }
    // alternating inner faces; a face whose merged entry is the identity
    // vanishes on normalized cochains
    std::int64_t sign = 1;
    for (int i = 1; i <= r; ++i) {
      sign = -sign;
      int merged = g->op(nzelem[digs[i - 1]], nzelem[digs[i]]);
      if (merged == g->identity) continue;
      for (int j = 0, w = 0; j <= r; ++j) {
        if (j == i) continue;
        sub[w++] = (j == i - 1) ? nzidx[merged] : digs[j];
      }
      col_base = nz_index(sub, km1) * rank;
      for (int a = 0; a < rank; ++a) mat.at(row_base + a, col_base + a) += sign;
    }
    sign = (r % 2 == 0) ? -1 : 1;
    for (int i = 0; i < r; ++i) sub[i] = digs[i];
    col_base = nz_index(sub, km1) * rank;
    for (int a = 0; a < rank; ++a) mat.at(row_base + a, col_base + a) += sign;
  } while (next_digits(digs, km1));

  for (auto& e : mat.a) e = mod_reduce(e, n);
  return mat;
}

CohomPtr cohomology_group(const GroupPtr& g, const ModulePtr& m, int degree,
                          const ResourceGuard& guard) {
  if (degree < 0) throw ValidationError("cohomology degree must be >= 0");
  if (g != m->group) throw ValidationError("cohomology_group: module lives over another group");
  std::int64_t entries = pow_checked(g->size, degree + 1, guard.max_entries);
  bool over = entries > guard.max_entries;
  if (!over && m->rank > 0) over = entries > guard.max_entries / m->rank;
  if (over)
    throw ResourceBoundError("resource bound exceeded: |G|^" + std::to_string(degree + 1) +
                             " * rank = " + std::to_string(g->size) + "^" +
                             std::to_string(degree + 1) + " * " + std::to_string(m->rank) +
                             " > " + std::to_string(guard.max_entries));

  auto hp = std::make_shared<CohomologyGroup>();
  auto& h = *hp;
  h.group_ = g;
  h.module_ = m;
  h.degree_ = degree;
  h.n_ = m->modulus;
  h.nzidx_.assign(g->size, -1);
  for (int x = 0; x < g->size; ++x)
    if (x != g->identity) {
      h.nzidx_[x] = static_cast<int>(h.nzelem_.size());
      h.nzelem_.push_back(x);
    }

  h.d_out_ = normalized_coboundary_matrix(g, m, degree);
  Mat64 cycles = linalg::kernel_mod(h.d_out_, h.n_);
  Mat64 boundaries = degree >= 1 ? normalized_coboundary_matrix(g, m, degree - 1)
                                 : Mat64(h.d_out_.cols, 0);
  h.sq_ = linalg::subquotient(cycles, boundaries, h.n_);
  h.presentation_ = h.sq_.group();

  h.gens_norm_ = h.sq_.generators();
  for (int j = 0; j < h.gens_norm_.cols; ++j) {
    Vec64 col(h.gens_norm_.rows);
    for (int i = 0; i < h.gens_norm_.rows; ++i) col[i] = h.gens_norm_.at(i, j);
    h.gens_.push_back(h.expand_normalized(col));
  }
  return hp;
}

std::int64_t CohomologyGroup::normalized_dim(int deg) const {
  std::int64_t d = module_->rank;
  for (int i = 0; i < deg; ++i) d *= (group_->size - 1);
  return d;
}

std::optional<Vec64> normalized_table(const Cochain& z) {
  const auto& g = *z.group;
  const auto& m = *z.module;
  const int k = g.size;
  const int rank = m.rank;
  const std::int64_t n = m.modulus;
  const int r = z.degree;

  std::vector<int> nzidx(k, -1);
  int next = 0;
  for (int x = 0; x < k; ++x)
    if (x != g.identity) nzidx[x] = next++;

  std::int64_t nd = rank;
  for (int i = 0; i < r; ++i) nd *= (k - 1);
  Vec64 out(static_cast<std::size_t>(nd), 0);
  if (r == 0) {
    Vec64 v = z.table;
    for (auto& e : v) e = mod_reduce(e, n);
    return v;
  }
  if (rank == 0) return out;
  std::vector<int> t(r, 0);
  std::vector<int> digs(r);
  do {
    bool has_id = false;
    for (int x : t) has_id |= x == g.identity;
    std::size_t off = tuple_offset(k, t, rank);
    if (has_id) {
      for (int a = 0; a < rank; ++a)
        if (mod_reduce(z.table[off + a], n) != 0) return std::nullopt;
    } else {
      for (int i = 0; i < r; ++i) digs[i] = nzidx[t[i]];
      std::size_t noff = nz_index(digs, k - 1) * rank;
      for (int a = 0; a < rank; ++a) out[noff + a] = mod_reduce(z.table[off + a], n);
    }
  } while (next_digits(t, k));
  return out;
}

std::optional<Vec64> CohomologyGroup::extract_normalized(const Cochain& z) const {
  return normalized_table(z);
}

Cochain CohomologyGroup::expand_normalized(const Vec64& v) const {
  const int k = group_->size;
  const int rank = module_->rank;
  Cochain z = zero_cochain(group_, module_, degree_);
  if (degree_ == 0) {
    z.table = v;
    for (auto& e : z.table) e = mod_reduce(e, n_);
    return z;
  }
  if (rank == 0 || v.empty()) return z;
  std::vector<int> digs(degree_, 0);
  std::vector<int> t(degree_);
  do {
    for (int i = 0; i < degree_; ++i) t[i] = nzelem_[digs[i]];
    std::size_t off = tuple_offset(k, t, rank);
    std::size_t noff = nz_index(digs, k - 1) * rank;
    for (int a = 0; a < rank; ++a) z.table[off + a] = mod_reduce(v[noff + a], n_);
  } while (next_digits(digs, k - 1));
  return z;
}

const ModSolver& CohomologyGroup::boundary_out_solver() const {
  std::lock_guard<std::mutex> lk(lazy_mu_);
  if (!out_solver_) out_solver_.emplace(d_out_, n_);
  return *out_solver_;
}

void CohomologyGroup::build_norm_system() const {
  // Linear system expressing (db)(T) = z(T) over all identity-containing
  // degree tuples T, with b a full cochain one degree down.
  const int k = group_->size;
  const int rank = module_->rank;
  const int r = degree_;
  std::int64_t cols64 = rank;
  for (int i = 0; i < r - 1; ++i) cols64 *= k;
  std::int64_t full64 = rank;
  for (int i = 0; i < r; ++i) full64 *= k;
  std::int64_t rows64 = full64 - normalized_dim(r);

  Mat64 sys(static_cast<int>(rows64), static_cast<int>(cols64));
  int row_base = 0;
  std::vector<int> t(r, 0);
  std::vector<int> sub(r - 1);
  do {
    bool has_id = false;
    for (int x : t) has_id |= x == group_->identity;
    if (!has_id) continue;
    for (int i = 0; i + 1 < r; ++i) sub[i] = t[i + 1];
    std::size_t col_base = tuple_offset(k, sub, rank);
    const Mat64& rho = module_->act(t[0]);
    for (int a = 0; a < rank; ++a)
      for (int b = 0; b < rank; ++b) {
        std::int64_t v = rho.at(a, b);
        if (v) sys.at(row_base + a, col_base + b) += v;
      }
    std::int64_t sign = 1;
    for (int i = 1; i <= r - 1; ++i) {
      sign = -sign;
      for (int j = 0, w = 0; j <= r - 1; ++j) {
        if (j == i) continue;
        sub[w++] = (j == i - 1) ? group_->op(t[i - 1], t[i]) : t[j];
      }
      col_base = tuple_offset(k, sub, rank);
      for (int a = 0; a < rank; ++a) sys.at(row_base + a, col_base + a) += sign;
    }
    sign = (r % 2 == 1) ? -1 : 1;
    for (int i = 0; i + 1 < r; ++i) sub[i] = t[i];
    col_base = tuple_offset(k, sub, rank);
    for (int a = 0; a < rank; ++a) sys.at(row_base + a, col_base + a) += sign;
    row_base += rank;
  } while (next_digits(t, k));

  for (auto& e : sys.a) e = mod_reduce(e, n_);
  norm_solver_.emplace(sys, n_);
  norm_system_ = std::move(sys);
}

Vec64 CohomologyGroup::normalized_vector_of(const Cochain& z) const {
  if (auto v = extract_normalized(z)) return *v;
  // Adjust by a coboundary that matches z on identity-containing tuples.
  std::lock_guard<std::mutex> lk(lazy_mu_);
  if (!norm_solver_) build_norm_system();
  const int k = group_->size;
  const int rank = module_->rank;
  Vec64 rhs;
  rhs.reserve(static_cast<std::size_t>(norm_solver_->rows()));
  std::vector<int> t(degree_, 0);
  do {
    bool has_id = false;
    for (int x : t) has_id |= x == group_->identity;
    if (!has_id) continue;
    std::size_t off = tuple_offset(k, t, rank);
    for (int a = 0; a < rank; ++a) rhs.push_back(z.table[off + a]);
  } while (next_digits(t, k));

  auto b = norm_solver_->solve(rhs);
  if (!b) throw ValidationError("cohomology: normalization system unsolvable (not a cocycle?)");
  Cochain bc = zero_cochain(group_, module_, degree_ - 1);
  bc.table = *b;
  Cochain adjusted = subtract(z, coboundary(bc));
  auto v = extract_normalized(adjusted);
  if (!v) throw ValidationError("cohomology: normalization failed to zero the identity tuples");
  return *v;
}

Vec64 CohomologyGroup::coordinates(const Cochain& z) const {
  if (z.group != group_ || z.degree != degree_ || !gmod::same_module(*z.module, *module_))
    throw ValidationError("coordinates: cochain does not belong to this (G, M, r)");
  if (!coboundary(z).is_zero()) throw ValidationError("coordinates: input is not a cocycle");
  Vec64 v = normalized_vector_of(z);
  auto c = sq_.coords(v);
  if (!c) throw ValidationError("coordinates: normalized cocycle outside the cycle span");
  return *c;
}

Cochain CohomologyGroup::representative(const Vec64& coords) const {
  if (coords.size() != presentation_.invariant_factors.size())
    throw ValidationError("representative: coordinate length mismatch");
  Vec64 v(static_cast<std::size_t>(normalized_dim(degree_)), 0);
  for (int j = 0; j < gens_norm_.cols; ++j)
    for (int i = 0; i < gens_norm_.rows; ++i)
      v[i] = mod_reduce(v[i] + coords[j] * gens_norm_.at(i, j), n_);
  return expand_normalized(v);
}

bool CohomologyClass::is_zero() const {
  for (auto c : coords)
    if (c != 0) return false;
  return true;
}

std::int64_t CohomologyClass::order() const {
  std::int64_t o = 1;
  const auto& f = parent->presentation().invariant_factors;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::int64_t fi = f[i];
    std::int64_t g = std::gcd(coords[i], fi);
    o = std::lcm(o, fi / g);
  }
  return o;
}

CohomologyClass make_class(CohomPtr parent, Vec64 coords) {
  const auto& f = parent->presentation().invariant_factors;
  if (coords.size() != f.size()) throw ValidationError("make_class: coordinate length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = mod_reduce(coords[i], f[i]);
  return CohomologyClass{std::move(parent), std::move(coords)};
}

CohomologyClass class_of(const CohomPtr& parent, const Cochain& cocycle) {
  return CohomologyClass{parent, parent->coordinates(cocycle)};
}

CohomologyClass add(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.parent->presentation() != b.parent->presentation())
    throw ValidationError("class add: presentations differ");
  Vec64 c(a.coords.size());
  const auto& f = a.parent->presentation().invariant_factors;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(a.coords[i] + b.coords[i], f[i]);
  return CohomologyClass{a.parent, std::move(c)};
}

CohomologyClass scale(const CohomologyClass& a, std::int64_t s) {
  Vec64 c(a.coords.size());
  const auto& f = a.parent->presentation().invariant_factors;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(a.coords[i] * mod_reduce(s, f[i]), f[i]);
  return CohomologyClass{a.parent, std::move(c)};
}

}  // namespace gcoh::cohomology
