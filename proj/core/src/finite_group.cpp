#include "gcoh/groups/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gcoh/errors.hpp"

namespace gcoh::groups {

int FiniteGroup::power(int g, std::int64_t k) const {
  int x = identity;
  for (std::int64_t i = 0; i < k; ++i) x = op(x, g);
  return x;
}

GroupPtr build_group(const std::vector<std::vector<int>>& cayley, std::string name,
                     std::vector<std::string> element_labels) {
  const int k = static_cast<int>(cayley.size());
  if (k == 0) throw ValidationError("build_group: empty table");
  auto g = std::make_shared<FiniteGroup>();
  g->size = k;
  g->name = std::move(name);
  g->cayley.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(cayley[i].size()) != k)
      throw ValidationError("build_group: table is not square");
    for (int j = 0; j < k; ++j) {
      int v = cayley[i][j];
      if (v < 0 || v >= k)
        throw ValidationError("build_group: entry out of range at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      g->cayley[static_cast<std::size_t>(i) * k + j] = v;
    }
  }

  int e = -1;
  for (int c = 0; c < k && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) ok = g->op(c, x) == x && g->op(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw ValidationError("build_group: missing identity element");
  g->identity = e;

  g->inverses.assign(k, -1);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y)
      if (g->op(x, y) == e && g->op(y, x) == e) {
        g->inverses[x] = y;
        break;
      }
    if (g->inverses[x] < 0)
      throw ValidationError("build_group: missing inverse for element " + std::to_string(x));
  }

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (g->op(g->op(a, b), c) != g->op(a, g->op(b, c)))
          throw ValidationError("build_group: associativity fails at triple (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");

  g->element_orders.assign(k, 1);
  for (int x = 0; x < k; ++x) {
    std::int64_t ord = 1;
    int y = x;
    while (y != e) {
      y = g->op(y, x);
      ++ord;
    }
    g->element_orders[x] = ord;
  }
  g->exponent = 1;
  for (auto o : g->element_orders) g->exponent = std::lcm(g->exponent, o);

  if (element_labels.empty()) {
    for (int i = 0; i < k; ++i) element_labels.push_back(std::to_string(i));
  } else if (static_cast<int>(element_labels.size()) != k) {
    throw ValidationError("build_group: wrong number of element labels");
  }
  g->element_labels = std::move(element_labels);
  return g;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {g->identity}}; }

Subgroup whole_subgroup(const GroupPtr& g) {
  Subgroup s{g, std::vector<int>(g->size)};
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

Subgroup cyclic_subgroup(const GroupPtr& g, int generator) {
  std::set<int> mem;
  int x = g->identity;
  mem.insert(x);
  do {
    x = g->op(x, generator);
    mem.insert(x);
  } while (x != g->identity);
  return Subgroup{g, std::vector<int>(mem.begin(), mem.end())};
}

std::vector<Subgroup> cyclic_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  for (int x = 0; x < g->size; ++x) seen.insert(cyclic_subgroup(g, x).members);
  std::vector<Subgroup> out;
  for (const auto& m : seen) out.push_back(Subgroup{g, m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

void validate_subgroup(const Subgroup& s) {
  const auto& g = *s.parent;
  if (!s.contains(g.identity)) throw ValidationError("subgroup: missing identity");
  for (int a : s.members) {
    if (!s.contains(g.inv(a))) throw ValidationError("subgroup: not closed under inverse");
    for (int b : s.members)
      if (!s.contains(g.op(a, b))) throw ValidationError("subgroup: not closed under product");
  }
}

SubgroupGroup subgroup_as_group(const Subgroup& s) {
  validate_subgroup(s);
  const auto& g = *s.parent;
  const int k = s.order();
  SubgroupGroup out;
  out.to_parent = s.members;
  out.from_parent.assign(g.size, -1);
  for (int i = 0; i < k; ++i) out.from_parent[s.members[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = g.label(s.members[i]);
    for (int j = 0; j < k; ++j) table[i][j] = out.from_parent[g.op(s.members[i], s.members[j])];
  }
  out.group = build_group(table, g.name + "-sub" + std::to_string(k), std::move(labels));
  return out;
}

QuotientMap quotient(const GroupPtr& g, const Subgroup& n) {
  validate_subgroup(n);
  for (int x = 0; x < g->size; ++x)
    for (int m : n.members) {
      int conj = g->op(g->op(x, m), g->inv(x));
      if (!n.contains(conj))
        throw ValidationError("quotient: subgroup not normal, witness g=" + std::to_string(x) +
                              " n=" + std::to_string(m) + " gng^-1=" + std::to_string(conj));
    }

  // Left cosets, ordered by their smallest member.
  std::vector<int> coset_of(g->size, -1);
  std::vector<int> reps;
  for (int x = 0; x < g->size; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : n.members) coset_of[g->op(x, m)] = id;
  }
  const int q = static_cast<int>(reps.size());
  if (q * n.order() != g->size) throw ValidationError("quotient: coset partition failed");

  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = "[" + g->label(reps[i]) + "]";
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[g->op(reps[i], reps[j])];
  }
  QuotientMap out;
  out.source = g;
  out.normal_subgroup = n;
  out.target = build_group(table, g->name + "/N", std::move(labels));
  out.projection = std::move(coset_of);
  return out;
}

}  // namespace gcoh::groups
