#include "gcoh/gmod/gmodule.hpp"

#include "gcoh/errors.hpp"

namespace gcoh::gmod {

using linalg::mod_reduce;
using linalg::mul_mod;

ModulePtr make_module(GroupPtr g, std::int64_t n, int rank, std::vector<Mat64> action,
                      std::string name, std::optional<InducedStructure> induced) {
  if (n < 1) throw ValidationError("GModule: modulus must be >= 1");
  if (rank < 0) throw ValidationError("GModule: negative rank");
  if (static_cast<int>(action.size()) != g->size)
    throw ValidationError("GModule: need one action matrix per group element");
  auto m = std::make_shared<GModule>();
  m->group = std::move(g);
  m->modulus = n;
  m->rank = rank;
  m->name = std::move(name);
  m->induced = std::move(induced);
  for (auto& a : action) {
    if (a.rows != rank || a.cols != rank) throw ValidationError("GModule: action matrix shape");
    a = linalg::reduce_mod(a, n);
  }
  m->action = std::move(action);

  const auto& grp = *m->group;
  const Mat64 id = linalg::reduce_mod(Mat64::identity(rank), n);
  if (m->action[grp.identity] != id)
    throw ValidationError("GModule: action(identity) is not the identity matrix");
  for (int a = 0; a < grp.size; ++a)
    for (int b = 0; b < grp.size; ++b)
      if (mul_mod(m->action[a], m->action[b], n) != m->action[grp.op(a, b)])
        throw ValidationError("GModule: action is not a homomorphism at pair (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
  for (int a = 0; a < grp.size; ++a)
    if (mul_mod(m->action[a], m->action[grp.inv(a)], n) != id)
      throw ValidationError("GModule: action matrix not invertible for element " +
                            std::to_string(a));
  return m;
}

bool same_module(const GModule& a, const GModule& b) {
  return a.group == b.group && a.modulus == b.modulus && a.rank == b.rank && a.action == b.action;
}

ModulePtr trivial_module(const GroupPtr& g, std::int64_t n, int rank) {
  std::vector<Mat64> action(g->size, Mat64::identity(rank));
  return make_module(g, n, rank, std::move(action), "trivial");
}

ModulePtr induced_module(const GroupPtr& g, const Subgroup& delta, std::int64_t n) {
  groups::validate_subgroup(delta);
  InducedStructure ind;
  ind.delta = delta;
  ind.coset_of.assign(g->size, -1);
  for (int x = 0; x < g->size; ++x) {
    if (ind.coset_of[x] >= 0) continue;
    int id = static_cast<int>(ind.coset_rep.size());
    ind.coset_rep.push_back(x);
    for (int m : delta.members) ind.coset_of[g->op(x, m)] = id;
  }
  ind.identity_coset = ind.coset_of[g->identity];
  const int rank = static_cast<int>(ind.coset_rep.size());

  std::vector<Mat64> action(g->size, Mat64(rank, rank));
  for (int x = 0; x < g->size; ++x)
    for (int c = 0; c < rank; ++c)
      action[x].at(ind.coset_of[g->op(x, ind.coset_rep[c])], c) = 1;
  std::string nm = delta.order() == 1 ? "regular" : "induced";
  return make_module(g, n, rank, std::move(action), std::move(nm), std::move(ind));
}

ModulePtr regular_module(const GroupPtr& g, std::int64_t n) {
  return induced_module(g, groups::trivial_subgroup(g), n);
}

ModulePtr restrict_module(const ModulePtr& m, const groups::SubgroupGroup& sub) {
  if (sub.group->size > m->group->size)
    throw ValidationError("restrict_module: subgroup larger than group");
  std::vector<Mat64> action;
  action.reserve(sub.group->size);
  for (int i = 0; i < sub.group->size; ++i) action.push_back(m->act(sub.to_parent[i]));
  return make_module(sub.group, m->modulus, m->rank, std::move(action), m->name + "|sub");
}

Pairing make_pairing(ModulePtr left, ModulePtr right, Mat64 p, bool require_perfect) {
  if (left->group != right->group || left->modulus != right->modulus)
    throw ValidationError("Pairing: modules live over different data");
  const std::int64_t n = left->modulus;
  if (p.rows != left->rank || p.cols != right->rank)
    throw ValidationError("Pairing: matrix shape mismatch");
  Pairing pr{std::move(left), std::move(right), linalg::reduce_mod(p, n), false};
  for (int g = 0; g < pr.left->group->size; ++g) {
    Mat64 lhs = mul_mod(mul_mod(pr.left->act(g).transposed(), pr.matrix, n), pr.right->act(g), n);
    if (lhs != pr.matrix)
      throw ValidationError("Pairing: not G-invariant at element " + std::to_string(g));
  }
  if (require_perfect) {
    if (!linalg::invertible_mod(pr.matrix, n))
      throw ValidationError("Pairing: matrix not invertible mod n");
    pr.perfect = true;
  }
  return pr;
}

std::pair<ModulePtr, Pairing> dual_module(const ModulePtr& m) {
  const auto& g = *m->group;
  std::vector<Mat64> action(g.size);
  for (int x = 0; x < g.size; ++x) action[x] = m->act(g.inv(x)).transposed();
  ModulePtr dual = make_module(m->group, m->modulus, m->rank, std::move(action), m->name + "*");
  Pairing eval = make_pairing(dual, m, Mat64::identity(m->rank), true);
  return {std::move(dual), std::move(eval)};
}

}  // namespace gcoh::gmod
