#include "gcoh/linalg/abelian_hom.hpp"

#include "gcoh/errors.hpp"
#include "gcoh/linalg/smith.hpp"

namespace gcoh::linalg {

namespace {

// |Z^l / span of columns([diag(factors) | extra])|, all diagonal factors >= 2.
mpz_class cokernel_order(const std::vector<std::int64_t>& factors, const Mat64& extra) {
  const int l = static_cast<int>(factors.size());
  if (l == 0) return 1;
  IntMatrix m(l, l + extra.cols);
  for (int i = 0; i < l; ++i) m.at(i, i) = static_cast<long>(factors[i]);
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < extra.cols; ++c) m.at(r, l + c) = static_cast<long>(extra.at(r, c));
  SmithDecomposition s = smith_normal_form(m);
  mpz_class order = 1;
  for (int i = 0; i < s.rank; ++i) order *= s.d.at(i, i);
  return order;
}

}  // namespace

void AbelianHom::validate() const {
  const int k = static_cast<int>(source.invariant_factors.size());
  const int l = static_cast<int>(target.invariant_factors.size());
  if (mat.rows != l || mat.cols != k) throw ValidationError("AbelianHom: matrix shape mismatch");
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < k; ++i) {
      std::int64_t e = target.invariant_factors[j];
      if (mod_reduce(mat.at(j, i) % e * (source.invariant_factors[i] % e), e) != 0)
        throw ValidationError("AbelianHom: entry does not annihilate the source factor");
    }
}

bool AbelianHom::is_zero() const {
  for (int j = 0; j < mat.rows; ++j)
    for (int i = 0; i < mat.cols; ++i)
      if (mod_reduce(mat.at(j, i), target.invariant_factors[j]) != 0) return false;
  return true;
}

mpz_class AbelianHom::image_order() const {
  return target.order() / cokernel_order(target.invariant_factors, mat);
}

mpz_class AbelianHom::kernel_order() const { return source.order() / image_order(); }

AbelianHom compose(const AbelianHom& outer, const AbelianHom& inner) {
  if (inner.target.invariant_factors != outer.source.invariant_factors)
    throw ValidationError("compose: middle groups differ");
  AbelianHom h;
  h.source = inner.source;
  h.target = outer.target;
  h.mat = Mat64(outer.mat.rows, inner.mat.cols);
  for (int j = 0; j < outer.mat.rows; ++j) {
    const std::int64_t e = outer.target.invariant_factors[j];
    for (int i = 0; i < inner.mat.cols; ++i) {
      std::int64_t acc = 0;
      for (int t = 0; t < outer.mat.cols; ++t)
        acc = mod_reduce(acc + mod_reduce(outer.mat.at(j, t), e) * mod_reduce(inner.mat.at(t, i), e), e);
      h.mat.at(j, i) = acc;
    }
  }
  return h;
}

bool exact_pair(const AbelianHom& incoming, const AbelianHom& outgoing) {
  if (!compose(outgoing, incoming).is_zero()) return false;
  return incoming.image_order() == outgoing.kernel_order();
}

KernelSubgroup kernel_subgroup(const AbelianHom& h, std::int64_t ambient_n) {
  const int k = static_cast<int>(h.source.invariant_factors.size());
  const int l = static_cast<int>(h.target.invariant_factors.size());
  KernelSubgroup out;
  if (k == 0) return out;
  for (auto f : h.source.invariant_factors)
    if (ambient_n % f != 0) throw ValidationError("kernel_subgroup: factor does not divide ambient modulus");

  // Integer lattice {x : h(x) == 0}: x-projection of ker [mat | diag(target)].
  IntMatrix m(l, k + l);
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < k; ++c) m.at(r, c) = static_cast<long>(h.mat.at(r, c));
    m.at(r, k + r) = static_cast<long>(h.target.invariant_factors[r]);
  }
  SmithDecomposition s = smith_normal_form(m);
  std::vector<Vec64> lattice_gens;
  mpz_class fi, red;
  for (int j = s.rank; j < k + l; ++j) {
    Vec64 x(k);
    for (int i = 0; i < k; ++i) {
      fi = h.source.invariant_factors[i];
      mpz_fdiv_r(red.get_mpz_t(), s.v.at(i, j).get_mpz_t(), fi.get_mpz_t());
      x[i] = red.get_si();
    }
    lattice_gens.push_back(std::move(x));
  }

  // Embed sum Z/f_i into (Z/n)^k by scaling coordinate i with n/f_i, then
  // present the generated subgroup there.
  Mat64 z(k, static_cast<int>(lattice_gens.size()));
  for (int j = 0; j < z.cols; ++j)
    for (int i = 0; i < k; ++i)
      z.at(i, j) = mod_reduce((ambient_n / h.source.invariant_factors[i]) * lattice_gens[j][i], ambient_n);
  SubquotientPresentation sq = subquotient(z, Mat64(k, 0), ambient_n);
  out.group = sq.group();
  for (int j = 0; j < sq.generators().cols; ++j) {
    Vec64 c(k);
    for (int i = 0; i < k; ++i) {
      std::int64_t scale = ambient_n / h.source.invariant_factors[i];
      std::int64_t e = sq.generators().at(i, j);
      if (e % scale != 0) throw ValidationError("kernel_subgroup: generator outside the embedded image");
      c[i] = mod_reduce(e / scale, h.source.invariant_factors[i]);
    }
    out.generator_coords.push_back(std::move(c));
  }
  return out;
}

mpz_class generated_subgroup_order(const FinAbGroup& g, const std::vector<Vec64>& elems,
                                   std::int64_t ambient_n) {
  const int k = static_cast<int>(g.invariant_factors.size());
  for (auto f : g.invariant_factors)
    if (ambient_n % f != 0)
      throw ValidationError("generated_subgroup_order: factor does not divide ambient modulus");
  Mat64 z(k, static_cast<int>(elems.size()));
  for (int j = 0; j < z.cols; ++j) {
    if (static_cast<int>(elems[j].size()) != k)
      throw ValidationError("generated_subgroup_order: coordinate length mismatch");
    for (int i = 0; i < k; ++i)
      z.at(i, j) = mod_reduce((ambient_n / g.invariant_factors[i]) * elems[j][i], ambient_n);
  }
  if (k == 0) return 1;
  return span_order_mod(z, ambient_n);
}

}  // namespace gcoh::linalg
