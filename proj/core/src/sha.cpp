#include "gcoh/sha/sha.hpp"

#include <chrono>
#include <numeric>

#include <nlohmann/json.hpp>

#include "gcoh/errors.hpp"
#include "gcoh/gmod/sequences.hpp"

namespace gcoh::sha {

using cohomology::class_of;
using cohomology::cohomology_group;
using cohomology::make_class;
using cohomology::make_restriction;
using linalg::AbelianHom;
using linalg::Mat64;
using linalg::Vec64;

ShaGroup sha1_omega(const GroupPtr& g, const ModulePtr& m, const ResourceGuard& guard) {
  ShaGroup sha;
  sha.ambient = cohomology_group(g, m, 1, guard);
  const auto& src = sha.ambient->presentation();
  if (src.trivial()) return sha;

  // One stacked system: rows of every restriction's coordinate matrix.
  AbelianHom stacked;
  stacked.source = src;
  stacked.mat = Mat64(0, static_cast<int>(src.invariant_factors.size()));
  for (const auto& sub : groups::cyclic_subgroups(g)) {
    auto res = make_restriction(sha.ambient, sub, guard);
    AbelianHom h = cohomology::hom_on_generators(sha.ambient, res.target,
                                                 [&](CohomologyClass x) { return res.apply(x); });
    for (auto f : h.target.invariant_factors) stacked.target.invariant_factors.push_back(f);
    Mat64 grown(stacked.mat.rows + h.mat.rows, stacked.mat.cols);
    for (int r = 0; r < stacked.mat.rows; ++r)
      for (int c = 0; c < stacked.mat.cols; ++c) grown.at(r, c) = stacked.mat.at(r, c);
    for (int r = 0; r < h.mat.rows; ++r)
      for (int c = 0; c < h.mat.cols; ++c) grown.at(stacked.mat.rows + r, c) = h.mat.at(r, c);
    stacked.mat = std::move(grown);
  }

  auto kernel = linalg::kernel_subgroup(stacked, m->modulus);
  sha.subgroup = kernel.group;
  for (const auto& c : kernel.generator_coords) sha.generators.push_back(make_class(sha.ambient, c));
  return sha;
}

ShaCertificate propdata_certificate(const GroupPtr& g, std::int64_t n,
                                    const ResourceGuard& guard) {
  const auto start = std::chrono::steady_clock::now();
  ShaCertificate cert;
  cert.group_name = g->name.empty() ? ("order-" + std::to_string(g->size)) : g->name;
  cert.n = n;
  cert.gcd_order = std::gcd(n, static_cast<std::int64_t>(g->size));
  cert.gcd_exponent = std::gcd(n, g->exponent);

  auto aug = gmod::augmentation_sequence(g, n);
  ShaGroup sha = sha1_omega(g, aug.a(), guard);

  cert.sha_invariants = sha.subgroup;
  cert.order_matches = sha.subgroup.order() == mpz_class(cert.gcd_order / cert.gcd_exponent);
  cert.cyclic = sha.subgroup.cyclic();

  // delta'(exp G): connect the class of exp G in H^0(G, Z/n) into H^1(G, H').
  auto h0c = cohomology_group(g, aug.c(), 0, guard);
  Vec64 m_coords(h0c->presentation().invariant_factors.size(), 0);
  if (!m_coords.empty()) m_coords[0] = linalg::mod_reduce(g->exponent, n);
  CohomologyClass gen = cohomology::connecting(aug, make_class(h0c, m_coords), sha.ambient);

  // Generator check inside the ambient presentation: <gen> must have the
  // subgroup's order and lie inside the subgroup spanned by its generators.
  std::vector<Vec64> span;
  for (const auto& s : sha.generators) span.push_back(s.coords);
  mpz_class sha_order = linalg::generated_subgroup_order(sha.ambient->presentation(), span, n);
  span.push_back(gen.coords);
  mpz_class joined = linalg::generated_subgroup_order(sha.ambient->presentation(), span, n);
  mpz_class gen_order =
      linalg::generated_subgroup_order(sha.ambient->presentation(), {gen.coords}, n);
  cert.generator_ok = sha_order == sha.subgroup.order() && joined == sha_order &&
                      gen_order == sha.subgroup.order();
  if (!cert.ok()) {
    cert.details = "sha=" + sha.subgroup.to_string() +
                   " expected order=" + std::to_string(cert.gcd_order / cert.gcd_exponent);
  }
  cert.elapsed_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();
  return cert;
}

std::string certificate_to_json(const ShaCertificate& c) {
  nlohmann::ordered_json j;
  j["group_name"] = c.group_name;
  j["n"] = c.n;
  j["N"] = c.gcd_order;
  j["Nprime"] = c.gcd_exponent;
  j["sha_invariants"] = c.sha_invariants.invariant_factors;
  j["order_matches"] = c.order_matches;
  j["cyclic"] = c.cyclic;
  j["generator_ok"] = c.generator_ok;
  j["elapsed_ms"] = c.elapsed_ms;
  if (!c.details.empty()) j["details"] = c.details;
  return j.dump();
}

}  // namespace gcoh::sha
