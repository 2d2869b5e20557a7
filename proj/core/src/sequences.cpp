#include "gcoh/gmod/sequences.hpp"

#include "gcoh/errors.hpp"

namespace gcoh::gmod {

using linalg::kernel_mod;
using linalg::Mat64;
using linalg::mul_mod;
using linalg::span_order_mod;

ModuleMap make_module_map(ModulePtr source, ModulePtr target, Mat64 matrix) {
  if (source->group != target->group) throw ValidationError("ModuleMap: different groups");
  if (source->modulus != target->modulus) throw ValidationError("ModuleMap: different moduli");
  const std::int64_t n = source->modulus;
  if (matrix.rows != target->rank || matrix.cols != source->rank)
    throw ValidationError("ModuleMap: matrix shape mismatch");
  ModuleMap m{std::move(source), std::move(target), linalg::reduce_mod(matrix, n)};
  for (int g = 0; g < m.source->group->size; ++g)
    if (mul_mod(m.matrix, m.source->act(g), n) != mul_mod(m.target->act(g), m.matrix, n))
      throw ValidationError("ModuleMap: not equivariant at element " + std::to_string(g));
  return m;
}

ShortExactSequence make_short_exact(ModuleMap inj, ModuleMap surj) {
  if (inj.target != surj.source && !same_module(*inj.target, *surj.source))
    throw ValidationError("ShortExactSequence: middle modules differ");
  const std::int64_t n = inj.source->modulus;

  if (kernel_mod(inj.matrix, n).cols != 0)
    throw ValidationError("ShortExactSequence: inj has nontrivial kernel");

  mpz_class full = 1;
  for (int i = 0; i < surj.target->rank; ++i) full *= n;
  if (span_order_mod(surj.matrix, n) != full)
    throw ValidationError("ShortExactSequence: surj is not surjective");

  if (!linalg::is_zero_mod(mul_mod(surj.matrix, inj.matrix, n), n))
    throw ValidationError("ShortExactSequence: surj o inj != 0");
  // |im inj| = n^rank(A) by injectivity; |ker surj| = n^rank(B) / n^rank(C).
  mpz_class im_inj = 1, ker_surj = 1;
  for (int i = 0; i < inj.source->rank; ++i) im_inj *= n;
  for (int i = 0; i < inj.target->rank - surj.target->rank; ++i) ker_surj *= n;
  if (im_inj != ker_surj)
    throw ValidationError("ShortExactSequence: im(inj) != ker(surj)");
  return ShortExactSequence{std::move(inj), std::move(surj)};
}

ShortExactSequence diagonal_sequence(const GroupPtr& g, std::int64_t n) {
  const int k = g->size;
  ModulePtr a = trivial_module(g, n, 1);
  ModulePtr b = regular_module(g, n);

  Mat64 inj(k, 1);
  for (int i = 0; i < k; ++i) inj.at(i, 0) = 1;

  // H: basis = images of e_x, x != identity, in index order.
  std::vector<int> pos(k, -1);
  std::vector<int> nonid;
  for (int x = 0; x < k; ++x)
    if (x != g->identity) {
      pos[x] = static_cast<int>(nonid.size());
      nonid.push_back(x);
    }
  const int r = k - 1;
  std::vector<Mat64> action(k, Mat64(r, r));
  for (int x = 0; x < k; ++x)
    for (int h : nonid) {
      int xh = g->op(x, h);
      if (xh != g->identity) {
        action[x].at(pos[xh], pos[h]) = 1;
      } else {
        for (int y : nonid) action[x].at(pos[y], pos[h]) = n - 1;
      }
    }
  ModulePtr c = make_module(g, n, r, std::move(action), "H");

  Mat64 surj(r, k);
  for (int x = 0; x < k; ++x) {
    if (x == g->identity) {
      for (int y : nonid) surj.at(pos[y], x) = n - 1;
    } else {
      surj.at(pos[x], x) = 1;
    }
  }
  return make_short_exact(make_module_map(a, b, std::move(inj)),
                          make_module_map(b, c, std::move(surj)));
}

ShortExactSequence augmentation_sequence(const GroupPtr& g, std::int64_t n) {
  const int k = g->size;
  ModulePtr b = regular_module(g, n);
  ModulePtr c = trivial_module(g, n, 1);

  std::vector<int> pos(k, -1);
  std::vector<int> nonid;
  for (int x = 0; x < k; ++x)
    if (x != g->identity) {
      pos[x] = static_cast<int>(nonid.size());
      nonid.push_back(x);
    }
  const int r = k - 1;
  // Action on the basis f_h = e_h - e_identity: x . f_h = f_{xh} - f_x.
  std::vector<Mat64> action(k, Mat64(r, r));
  for (int x = 0; x < k; ++x)
    for (int h : nonid) {
      int xh = g->op(x, h);
      if (xh != g->identity) action[x].at(pos[xh], pos[h]) += 1;
      if (x != g->identity) action[x].at(pos[x], pos[h]) += n - 1;
    }
  ModulePtr a = make_module(g, n, r, std::move(action), "Hprime");

  Mat64 inj(k, r);
  for (int h : nonid) {
    inj.at(h, pos[h]) = 1;
    inj.at(g->identity, pos[h]) = n - 1;
  }
  Mat64 surj(1, k);
  for (int x = 0; x < k; ++x) surj.at(0, x) = 1;

  return make_short_exact(make_module_map(a, b, std::move(inj)),
                          make_module_map(b, c, std::move(surj)));
}

Pairing descended_pairing(const ShortExactSequence& diag, const ShortExactSequence& aug) {
  // <pi(e_x), f_y> inherits delta_{x,y} from the dual-basis pairing on the
  // regular module; in the fixed bases the matrix is the identity.
  return make_pairing(diag.c(), aug.a(), Mat64::identity(diag.c()->rank), true);
}

namespace {

bool equivariant_iso(const ModulePtr& from, const ModulePtr& to, const Mat64& t,
                     std::string& why) {
  const std::int64_t n = from->modulus;
  if (t.rows != to->rank || t.cols != from->rank) {
    why = "iso matrix shape mismatch";
    return false;
  }
  for (int g = 0; g < from->group->size; ++g)
    if (mul_mod(t, from->act(g), n) != mul_mod(to->act(g), t, n)) {
      why = "iso not equivariant at element " + std::to_string(g);
      return false;
    }
  if (!linalg::invertible_mod(t, n)) {
    why = "iso matrix not invertible mod n";
    return false;
  }
  return true;
}

}  // namespace

DualityReport verify_duality(const GroupPtr& g, std::int64_t n) {
  DualityReport rep;
  ShortExactSequence diag = diagonal_sequence(g, n);
  ShortExactSequence aug = augmentation_sequence(g, n);

  auto [dual_a, pa] = dual_module(diag.a());
  auto [dual_b, pb] = dual_module(diag.b());
  auto [dual_c, pc] = dual_module(diag.c());

  // Dualized sequence: 1 -> C* -> B* -> A* -> 1 with matrices the transposes.
  Mat64 dual_surj = diag.surj.matrix.transposed();  // C* -> B*
  Mat64 dual_inj = diag.inj.matrix.transposed();    // B* -> A*

  // Candidate isomorphisms are the identity in the fixed bases.
  rep.iso_c = Mat64::identity(dual_c->rank);  // C* -> H'
  rep.iso_b = Mat64::identity(dual_b->rank);  // B* -> B
  rep.iso_a = Mat64::identity(dual_a->rank);  // A* -> Z/n

  std::string why;
  if (!equivariant_iso(dual_c, aug.a(), rep.iso_c, why)) {
    rep.failure = "C*: " + why;
    return rep;
  }
  if (!equivariant_iso(dual_b, aug.b(), rep.iso_b, why)) {
    rep.failure = "B*: " + why;
    return rep;
  }
  if (!equivariant_iso(dual_a, aug.c(), rep.iso_a, why)) {
    rep.failure = "A*: " + why;
    return rep;
  }
  // Squares: aug.inj o iso_c == iso_b o dual(surj); aug.surj o iso_b == iso_a o dual(inj).
  if (mul_mod(aug.inj.matrix, rep.iso_c, n) != mul_mod(rep.iso_b, dual_surj, n)) {
    rep.failure = "square C* -> B* does not commute";
    return rep;
  }
  if (mul_mod(aug.surj.matrix, rep.iso_b, n) != mul_mod(rep.iso_a, dual_inj, n)) {
    rep.failure = "square B* -> A* does not commute";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace gcoh::gmod
