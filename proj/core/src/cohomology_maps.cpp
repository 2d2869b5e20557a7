#include "gcoh/cohomology/maps.hpp"

#include "gcoh/errors.hpp"

namespace gcoh::cohomology {

using linalg::mod_reduce;
using linalg::ModSolver;

namespace {

bool next_tuple(std::vector<int>& t, int k) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < k) return true;
    t[i] = 0;
  }
  return false;
}

void check_module_content(const GModule& got, const GModule& want, const char* where) {
  if (!gmod::same_module(got, want)) throw ValidationError(std::string(where) + ": module mismatch");
}

}  // namespace

CohomologyClass Restriction::apply(const CohomologyClass& x) const {
  const Cochain z = x.representative();
  const int r = z.degree;
  const int rank = restricted_module->rank;
  const std::int64_t n = restricted_module->modulus;
  const int ks = sub.group->size;
  const int kg = x.parent->group()->size;

  Cochain out = zero_cochain(sub.group, restricted_module, r);
  if (rank > 0) {
    std::vector<int> t(r, 0);
    std::vector<int> pt(r);
    do {
      for (int i = 0; i < r; ++i) pt[i] = sub.to_parent[t[i]];
      std::size_t src = tuple_offset(kg, pt, rank);
      std::size_t dst = tuple_offset(ks, t, rank);
      for (int a = 0; a < rank; ++a) out.table[dst + a] = mod_reduce(z.table[src + a], n);
    } while (next_tuple(t, ks));
  }
  return class_of(target, out);
}

Restriction make_restriction(const CohomPtr& source, const Subgroup& delta,
                             const ResourceGuard& guard) {
  if (delta.parent != source->group())
    throw ValidationError("restriction: subgroup of a different group");
  Restriction res;
  res.sub = groups::subgroup_as_group(delta);
  res.restricted_module = gmod::restrict_module(source->module(), res.sub);
  res.target = cohomology_group(res.sub.group, res.restricted_module, source->degree(), guard);
  return res;
}

CohomologyClass restrict_class(const CohomologyClass& x, const Subgroup& delta,
                               const ResourceGuard& guard) {
  return make_restriction(x.parent, delta, guard).apply(x);
}

CohomologyClass pushforward(const ModuleMap& f, const CohomologyClass& x, const CohomPtr& target) {
  check_module_content(*f.source, *x.parent->module(), "pushforward source");
  check_module_content(*f.target, *target->module(), "pushforward target");
  if (target->degree() != x.parent->degree() || target->group() != x.parent->group())
    throw ValidationError("pushforward: target group/degree mismatch");

  const Cochain z = x.representative();
  const std::int64_t n = f.target->modulus;
  const int rs = f.source->rank, rt = f.target->rank;
  Cochain out = zero_cochain(target->group(), target->module(), z.degree);
  const std::size_t tuples = rs == 0 ? 0 : z.table.size() / rs;
  for (std::size_t tup = 0; tup < tuples; ++tup)
    for (int a = 0; a < rt; ++a) {
      std::int64_t acc = 0;
      for (int b = 0; b < rs; ++b)
        acc = mod_reduce(acc + f.matrix.at(a, b) * z.table[tup * rs + b], n);
      out.table[tup * rt + a] = acc;
    }
  return class_of(target, out);
}

CohomologyClass pushforward(const ModuleMap& f, const CohomologyClass& x,
                            const ResourceGuard& guard) {
  return pushforward(f, x, cohomology_group(x.parent->group(), f.target, x.parent->degree(), guard));
}

CohomologyClass inflate(const CohomologyClass& x, const QuotientMap& q, const ModulePtr& m,
                        const CohomPtr& target) {
  if (x.parent->group() != q.target) throw ValidationError("inflate: class not over the quotient");
  if (m->group != q.source) throw ValidationError("inflate: module not over the source group");
  for (int nm : q.normal_subgroup.members)
    if (m->act(nm) != linalg::Mat64::identity(m->rank))
      throw ValidationError("inflate: normal subgroup acts nontrivially, element " +
                            std::to_string(nm));
  const auto& mq = *x.parent->module();
  if (mq.modulus != m->modulus || mq.rank != m->rank)
    throw ValidationError("inflate: module shapes differ");
  for (int g = 0; g < q.source->size; ++g)
    if (m->act(g) != mq.act(q.projection[g]))
      throw ValidationError("inflate: quotient module action incompatible at element " +
                            std::to_string(g));
  check_module_content(*target->module(), *m, "inflate target");
  if (target->group() != q.source || target->degree() != x.parent->degree())
    throw ValidationError("inflate: target mismatch");

  const Cochain z = x.representative();
  const int r = z.degree;
  const int rank = m->rank;
  const std::int64_t n = m->modulus;
  Cochain out = zero_cochain(q.source, m, r);
  if (rank > 0) {
    const int kg = q.source->size;
    const int kq = q.target->size;
    std::vector<int> t(r, 0), pt(r);
    do {
      for (int i = 0; i < r; ++i) pt[i] = q.projection[t[i]];
      std::size_t src = tuple_offset(kq, pt, rank);
      std::size_t dst = tuple_offset(kg, t, rank);
      for (int a = 0; a < rank; ++a) out.table[dst + a] = mod_reduce(z.table[src + a], n);
    } while (next_tuple(t, kg));
  }
  return class_of(target, out);
}

CohomologyClass inflate(const CohomologyClass& x, const QuotientMap& q, const ModulePtr& m,
                        const ResourceGuard& guard) {
  return inflate(x, q, m, cohomology_group(q.source, m, x.parent->degree(), guard));
}

namespace {

Mat64 canonical_section(const ShortExactSequence& s) {
  const std::int64_t n = s.modulus();
  const int rb = s.b()->rank, rc = s.c()->rank;
  ModSolver surj_solver(s.surj.matrix, n);
  Mat64 section(rb, rc);
  for (int c = 0; c < rc; ++c) {
    Vec64 e(rc, 0);
    e[c] = 1;
    auto col = surj_solver.solve(e);
    if (!col) throw ValidationError("connecting: surjection admits no section");
    for (int b = 0; b < rb; ++b) section.at(b, c) = (*col)[b];
  }
  return section;
}

Mat64 left_inverse_of_inj(const ShortExactSequence& s) {
  const std::int64_t n = s.modulus();
  const int ra = s.a()->rank, rb = s.b()->rank;
  ModSolver injt_solver(s.inj.matrix.transposed(), n);
  Mat64 left_inv(ra, rb);
  for (int a = 0; a < ra; ++a) {
    Vec64 e(ra, 0);
    e[a] = 1;
    auto u = injt_solver.solve(e);
    if (!u) throw ValidationError("connecting: inj admits no left inverse");
    for (int b = 0; b < rb; ++b) left_inv.at(a, b) = (*u)[b];
  }
  return left_inv;
}

}  // namespace

ConnectingMap::ConnectingMap(ShortExactSequence s)
    : s_(std::move(s)), section_(canonical_section(s_)), left_inv_(left_inverse_of_inj(s_)) {}

ConnectingMap::ConnectingMap(ShortExactSequence s, Mat64 section)
    : s_(std::move(s)), section_(std::move(section)), left_inv_(left_inverse_of_inj(s_)) {
  const std::int64_t n = s_.modulus();
  if (section_.rows != s_.b()->rank || section_.cols != s_.c()->rank)
    throw ValidationError("connecting: section shape mismatch");
  if (linalg::mul_mod(s_.surj.matrix, section_, n) !=
      linalg::reduce_mod(Mat64::identity(s_.c()->rank), n))
    throw ValidationError("connecting: supplied section does not split surj");
}

Cochain ConnectingMap::apply_cochain(const Cochain& z) const {
  if (!gmod::same_module(*z.module, *s_.c()))
    throw ValidationError("connecting: cochain is not over C");
  const std::int64_t n = s_.modulus();
  const int ra = s_.a()->rank, rb = s_.b()->rank, rc = s_.c()->rank;
  const auto& g = z.group;

  Cochain lifted = zero_cochain(g, s_.b(), z.degree);
  std::size_t tuples = 1;
  for (int i = 0; i < z.degree; ++i) tuples *= g->size;
  for (std::size_t tup = 0; tup < tuples; ++tup)
    for (int b = 0; b < rb; ++b) {
      std::int64_t acc = 0;
      for (int c = 0; c < rc; ++c)
        acc = mod_reduce(acc + section_.at(b, c) * z.table[tup * rc + c], n);
      lifted.table[tup * rb + b] = acc;
    }
  Cochain w = coboundary(lifted);

  Cochain out = zero_cochain(g, s_.a(), z.degree + 1);
  const std::size_t wtuples = rb == 0 ? 0 : w.table.size() / rb;
  for (std::size_t tup = 0; tup < wtuples; ++tup) {
    for (int a = 0; a < ra; ++a) {
      std::int64_t acc = 0;
      for (int b = 0; b < rb; ++b)
        acc = mod_reduce(acc + left_inv_.at(a, b) * w.table[tup * rb + b], n);
      out.table[tup * ra + a] = acc;
    }
    // The coboundary of the lift must land in im(inj); verify the pullback.
    for (int b = 0; b < rb; ++b) {
      std::int64_t acc = 0;
      for (int a = 0; a < ra; ++a)
        acc = mod_reduce(acc + s_.inj.matrix.at(b, a) * out.table[tup * ra + a], n);
      if (acc != mod_reduce(w.table[tup * rb + b], n))
        throw ValidationError("connecting: coboundary of the lift escaped im(inj)");
    }
  }
  return out;
}

CohomologyClass ConnectingMap::apply(const CohomologyClass& x, const CohomPtr& target) const {
  check_module_content(*x.parent->module(), *s_.c(), "connecting source");
  check_module_content(*target->module(), *s_.a(), "connecting target");
  if (target->degree() != x.parent->degree() + 1 || target->group() != x.parent->group())
    throw ValidationError("connecting: target group/degree mismatch");
  return class_of(target, apply_cochain(x.representative()));
}

CohomologyClass connecting(const ShortExactSequence& s, const CohomologyClass& x,
                           const CohomPtr& target) {
  return ConnectingMap(s).apply(x, target);
}

CohomologyClass connecting(const ShortExactSequence& s, const CohomologyClass& x,
                           const ResourceGuard& guard) {
  auto target = cohomology_group(x.parent->group(), s.a(), x.parent->degree() + 1, guard);
  return connecting(s, x, target);
}

CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y, const Pairing& p,
                    const CohomPtr& target) {
  check_module_content(*p.left, *x.parent->module(), "cup left");
  check_module_content(*p.right, *y.parent->module(), "cup right");
  if (x.parent->group() != y.parent->group()) throw ValidationError("cup: different groups");
  const int deg = x.parent->degree() + y.parent->degree();
  if (target->group() != x.parent->group() || target->degree() != deg)
    throw ValidationError("cup: target group/degree mismatch");
  const auto& tm = *target->module();
  if (tm.rank != 1 || tm.modulus != p.left->modulus)
    throw ValidationError("cup: target must be the rank-one trivial module");

  const std::int64_t n = tm.modulus;
  const auto& g = *x.parent->group();
  const int k = g.size;
  const int dp = x.parent->degree(), dq = y.parent->degree();
  const int rl = p.left->rank, rr = p.right->rank;

  const Cochain zx = x.representative();
  const Cochain zy = y.representative();
  Cochain out = zero_cochain(target->group(), target->module(), deg);

  std::vector<int> t(deg, 0), tx(dp), ty(dq);
  Vec64 acted(rr);
  do {
    for (int i = 0; i < dp; ++i) tx[i] = t[i];
    for (int i = 0; i < dq; ++i) ty[i] = t[dp + i];
    int prefix = g.identity;
    for (int i = 0; i < dp; ++i) prefix = g.op(prefix, t[i]);

    std::size_t offx = tuple_offset(k, tx, rl);
    std::size_t offy = tuple_offset(k, ty, rr);
    const Mat64& rho = p.right->act(prefix);
    for (int a = 0; a < rr; ++a) {
      std::int64_t acc = 0;
      for (int b = 0; b < rr; ++b)
        acc = mod_reduce(acc + rho.at(a, b) * zy.table[offy + b], n);
      acted[a] = acc;
    }
    std::int64_t val = 0;
    for (int a = 0; a < rl; ++a) {
      if (zx.table[offx + a] == 0) continue;
      std::int64_t row = 0;
      for (int b = 0; b < rr; ++b) row = mod_reduce(row + p.matrix.at(a, b) * acted[b], n);
      val = mod_reduce(val + zx.table[offx + a] * row, n);
    }
    out.table[tuple_offset(k, t, 1)] = val;
  } while (next_tuple(t, k));

  return class_of(target, out);
}

CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y, const Pairing& p,
                    const ResourceGuard& guard) {
  auto triv = gmod::trivial_module(x.parent->group(), p.left->modulus, 1);
  auto target = cohomology_group(x.parent->group(), triv,
                                 x.parent->degree() + y.parent->degree(), guard);
  return cup(x, y, p, target);
}

ShapiroImage shapiro(const CohomologyClass& x, const ResourceGuard& guard) {
  const auto& m = *x.parent->module();
  if (!m.induced) throw ValidationError("shapiro: module was not built as an induced module");
  const auto& ind = *m.induced;

  ShapiroImage out;
  out.sub = groups::subgroup_as_group(ind.delta);
  auto triv = gmod::trivial_module(out.sub.group, m.modulus, 1);
  out.target = cohomology_group(out.sub.group, triv, x.parent->degree(), guard);

  const Cochain z = x.representative();
  const int r = z.degree;
  const int ks = out.sub.group->size;
  const int kg = x.parent->group()->size;
  Cochain img = zero_cochain(out.sub.group, triv, r);
  std::vector<int> t(r, 0), pt(r);
  do {
    for (int i = 0; i < r; ++i) pt[i] = out.sub.to_parent[t[i]];
    img.table[tuple_offset(ks, t, 1)] =
        z.table[tuple_offset(kg, pt, m.rank) + ind.identity_coset];
  } while (next_tuple(t, ks));
  out.cls = class_of(out.target, img);
  return out;
}

}  // namespace gcoh::cohomology
