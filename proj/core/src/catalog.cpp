#include "gcoh/groups/catalog.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "gcoh/errors.hpp"

namespace gcoh::groups {

namespace {

std::string product_name(const std::vector<std::int64_t>& factors) {
  if (factors.empty()) return "C1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += "C" + std::to_string(factors[i]);
  }
  return s;
}

// Invariant-factor chains d1 | d2 | ... with product `order`, each di >= 2,
// in lexicographic order.
void chains_rec(std::int64_t order, std::int64_t min_factor, std::vector<std::int64_t>& cur,
                std::vector<std::vector<std::int64_t>>& out) {
  if (order == 1) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t d = min_factor; d <= order; ++d) {
    if (order % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    chains_rec(order / d, d, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::int64_t>> invariant_factor_chains(std::int64_t order) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  chains_rec(order, 2, cur, out);
  return out;
}

}  // namespace

GroupPtr cyclic_product(const std::vector<std::int64_t>& factors) {
  std::int64_t size64 = 1;
  for (auto f : factors) {
    if (f < 1) throw ValidationError("cyclic_product: factor < 1");
    size64 *= f;
  }
  if (size64 > 4096) throw ValidationError("cyclic_product: order too large");
  const int k = static_cast<int>(size64);
  const int nf = static_cast<int>(factors.size());

  auto decode = [&](int idx) {
    std::vector<std::int64_t> t(nf);
    for (int i = nf - 1; i >= 0; --i) {
      t[i] = idx % factors[i];
      idx = static_cast<int>(idx / factors[i]);
    }
    return t;
  };
  auto encode = [&](const std::vector<std::int64_t>& t) {
    std::int64_t idx = 0;
    for (int i = 0; i < nf; ++i) idx = idx * factors[i] + t[i];
    return static_cast<int>(idx);
  };

  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int a = 0; a < k; ++a) {
    auto ta = decode(a);
    std::string lab = "(";
    for (int i = 0; i < nf; ++i) lab += (i ? "," : "") + std::to_string(ta[i]);
    labels[a] = lab + ")";
    for (int b = 0; b < k; ++b) {
      auto tb = decode(b);
      std::vector<std::int64_t> tc(nf);
      for (int i = 0; i < nf; ++i) tc[i] = (ta[i] + tb[i]) % factors[i];
      table[a][b] = encode(tc);
    }
  }
  return build_group(table, product_name(factors), std::move(labels));
}

GroupPtr dihedral_group(int m) {
  if (m < 1) throw ValidationError("dihedral_group: m < 1");
  const int k = 2 * m;
  auto mod = [m](int x) { return ((x % m) + m) % m; };
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (int a = 0; a < k; ++a) {
    labels[a] = a < m ? "r" + std::to_string(a) : "sr" + std::to_string(a - m);
    for (int b = 0; b < k; ++b) {
      bool ra = a < m, rb = b < m;
      int i = a % m, j = b % m;
      int v;
      if (ra && rb) v = mod(i + j);                 // r^i r^j
      else if (ra && !rb) v = m + mod(j - i);       // r^i (s r^j) = s r^(j-i)
      else if (!ra && rb) v = m + mod(i + j);       // (s r^i) r^j = s r^(i+j)
      else v = mod(j - i);                          // (s r^i)(s r^j) = r^(j-i)
      table[a][b] = v;
    }
  }
  return build_group(table, "D" + std::to_string(m), std::move(labels));
}

GroupPtr quaternion_group() {
  // Elements (s, u): sign s in {+,-}, unit u in {1, i, j, k}; index 2u + s.
  auto mul_unit = [](int a, int b, int& sign) {
    // 0=1, 1=i, 2=j, 3=k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    sign = sgn[a][b];
    return unit[a][b];
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      int s;
      int u = mul_unit(ua, ub, s);
      int sign = (sa + sb + (s < 0 ? 1 : 0)) % 2;
      table[a][b] = 2 * u + sign;
    }
  return build_group(table, "Q8", std::move(labels));
}

GroupPtr symmetric4_group() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::array<int, 4>, int> index;
  for (int i = 0; i < 24; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> table(24, std::vector<int>(24));
  std::vector<std::string> labels(24);
  for (int a = 0; a < 24; ++a) {
    std::string lab;
    for (int x : perms[a]) lab += std::to_string(x);
    labels[a] = lab;
    for (int b = 0; b < 24; ++b) {
      std::array<int, 4> c;
      for (int x = 0; x < 4; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = index[c];
    }
  }
  return build_group(table, "S4", std::move(labels));
}

std::vector<CatalogEntry> catalog(int max_order) {
  if (max_order < 1) throw ValidationError("catalog: max_order < 1");
  std::vector<CatalogEntry> out;
  for (int m = 1; m <= max_order; ++m) {
    for (const auto& chain : invariant_factor_chains(m)) {
      CatalogEntry e;
      e.group = cyclic_product(chain);
      e.name = e.group->name;
      if (e.name == "C2xC2") e.aliases = {"V4", "K4"};
      out.push_back(std::move(e));
    }
    if (m >= 6 && m % 2 == 0 && m / 2 >= 3 && m / 2 <= 6) {
      CatalogEntry e;
      e.group = dihedral_group(m / 2);
      e.name = e.group->name;
      if (e.name == "D3") e.aliases = {"S3"};
      out.push_back(std::move(e));
    }
    if (m == 8) {
      out.push_back(CatalogEntry{"Q8", {}, quaternion_group()});
    }
    if (m == 24) {
      out.push_back(CatalogEntry{"S4", {}, symmetric4_group()});
    }
  }
  return out;
}

std::optional<GroupPtr> catalog_lookup(const std::string& name) {
  for (const auto& e : catalog(24)) {
    if (e.name == name) return e.group;
    for (const auto& a : e.aliases)
      if (a == name) return e.group;
  }
  return std::nullopt;
}

GroupPtr group_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("group JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j.contains("cayley"))
    throw ValidationError("group JSON: expected object with size and cayley");
  const int size = j["size"].get<int>();
  auto table = j["cayley"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != size)
    throw ValidationError("group JSON: cayley row count != size");
  std::string name = j.value("name", std::string("user"));
  return build_group(table, name);
}

std::string group_to_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name;
  j["size"] = g.size;
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < g.size; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < g.size; ++c) row.push_back(g.op(r, c));
    rows.push_back(std::move(row));
  }
  j["cayley"] = std::move(rows);
  return j.dump();
}

}  // namespace gcoh::groups
