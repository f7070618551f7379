#include "dtg/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace dtg {

std::string FiniteGroup::name_of(int a) const {
  if (a >= 0 && a < static_cast<int>(names.size())) return names[a];
  return "x" + std::to_string(a);
}

int FiniteGroup::element_order(int a) const {
  int n = 1;
  int x = a;
  while (x != identity) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

GroupValidation validate_group(const std::vector<std::vector<int>>& table,
                               std::vector<std::string> names) {
  GroupValidation v;
  const int m = static_cast<int>(table.size());
  if (m == 0) {
    v.defect = GroupDefect::BadShape;
    v.message = "table is empty";
    return v;
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(table[i].size()) != m) {
      v.defect = GroupDefect::BadShape;
      v.witness = {i, -1, -1};
      v.message = "row " + std::to_string(i) + " is not of length " +
                  std::to_string(m);
      return v;
    }
    for (int j = 0; j < m; ++j) {
      if (table[i][j] < 0 || table[i][j] >= m) {
        v.defect = GroupDefect::BadShape;
        v.witness = {i, j, -1};
        v.message = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range";
        return v;
      }
    }
  }

  int identity = -1;
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      if (table[e][i] != i || table[i][e] != i) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity == -1) {
    v.defect = GroupDefect::NoIdentity;
    v.message = "no two-sided identity element";
    return v;
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          v.defect = GroupDefect::NotAssociative;
          v.witness = {i, j, k};
          v.message = "associativity fails at (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")";
          return v;
        }
      }
    }
  }

  std::vector<int> inverse(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (table[i][j] == identity && table[j][i] == identity) {
        inverse[i] = j;
        break;
      }
    }
    if (inverse[i] == -1) {
      v.defect = GroupDefect::NoInverse;
      v.witness = {i, -1, -1};
      v.message = "element " + std::to_string(i) + " has no inverse";
      return v;
    }
  }

  FiniteGroup g;
  g.order = m;
  g.table = table;
  g.identity = identity;
  g.inverse = std::move(inverse);
  if (!names.empty() && static_cast<int>(names.size()) != m) {
    throw std::invalid_argument("validate_group: names length mismatch");
  }
  g.names = std::move(names);
  v.group = std::move(g);
  return v;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  auto v = validate_group(table);
  return *v.group;
}

FiniteGroup dihedral_8() {
  // index = a + 4*eps encodes r^a s^eps
  auto idx = [](int a, int eps) { return ((a % 4) + 4) % 4 + 4 * (eps % 2); };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i) {
    const int a = i % 4, eps = i / 4;
    for (int j = 0; j < 8; ++j) {
      const int b = j % 4, delta = j / 4;
      // (r^a s^eps)(r^b s^delta): s r^b = r^{-b} s
      table[i][j] = eps == 0 ? idx(a + b, delta) : idx(a - b, 1 + delta);
    }
  }
  auto v = validate_group(
      table, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
  return *v.group;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order * h.order;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    const int a1 = i / h.order, b1 = i % h.order;
    for (int j = 0; j < m; ++j) {
      const int a2 = j / h.order, b2 = j % h.order;
      table[i][j] = g.mul(a1, a2) * h.order + h.mul(b1, b2);
    }
  }
  auto v = validate_group(table);
  return *v.group;
}

namespace {

void check_elements(const FiniteGroup& g, const std::vector<int>& s,
                    const char* what) {
  for (int x : s) {
    if (x < 0 || x >= g.order) {
      throw std::invalid_argument(std::string(what) +
                                  ": element index out of range");
    }
  }
}

std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& s) {
  std::set<int> members{g.identity};
  std::vector<int> frontier{g.identity};
  for (int x : s) {
    if (members.insert(x).second) frontier.push_back(x);
  }
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    std::vector<int> next{g.inv(x)};
    for (int y : members) {
      next.push_back(g.mul(x, y));
      next.push_back(g.mul(y, x));
    }
    for (int z : next) {
      if (members.insert(z).second) frontier.push_back(z);
    }
  }
  return std::vector<int>(members.begin(), members.end());
}

bool set_is_normal(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::set<int> members(subgroup.begin(), subgroup.end());
  for (int x = 0; x < g.order; ++x) {
    for (int n : subgroup) {
      if (!members.count(g.mul(g.mul(x, n), g.inv(x)))) return false;
    }
  }
  return true;
}

}  // namespace

SubgroupInfo subgroup_ops(const FiniteGroup& g, const std::vector<int>& s) {
  check_elements(g, s, "subgroup_ops");
  SubgroupInfo info;
  info.closure = closure_of(g, s);

  std::set<int> input(s.begin(), s.end());
  info.is_subgroup = input.size() == info.closure.size() &&
                     std::equal(info.closure.begin(), info.closure.end(),
                                input.begin());
  info.is_normal = set_is_normal(g, info.closure);
  info.is_symmetric_genset = !input.count(g.identity);
  for (int x : s) {
    if (!input.count(g.inv(x))) info.is_symmetric_genset = false;
  }
  return info;
}

QuotientGroup quotient_group(const FiniteGroup& g,
                             const std::vector<int>& normal_subgroup) {
  check_elements(g, normal_subgroup, "quotient_group");
  auto info = subgroup_ops(g, normal_subgroup);
  if (!info.is_subgroup || !info.is_normal) {
    throw std::invalid_argument(
        "quotient_group: the given set is not a normal subgroup");
  }
  const std::vector<int>& n = info.closure;

  QuotientGroup q;
  q.coset_of.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (q.coset_of[x] != -1) continue;
    const int label = static_cast<int>(q.representatives.size());
    q.representatives.push_back(x);  // x is minimal: smaller ones are labeled
    for (int h : n) q.coset_of[g.mul(x, h)] = label;
  }
  const int k = static_cast<int>(q.representatives.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      table[a][b] = q.coset_of[g.mul(q.representatives[a], q.representatives[b])];
    }
  }
  auto v = validate_group(table);
  if (!v.ok()) {
    throw std::logic_error("quotient_group: induced table is not a group: " +
                           v.message);
  }
  q.group = *v.group;
  return q;
}

HomReport hom_check(const FiniteGroup& g, const FiniteGroup& h,
                    const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.order) {
    throw std::invalid_argument("hom_check: map is not total on the source");
  }
  check_elements(h, f, "hom_check");
  HomReport r;
  r.is_hom = true;
  for (int x = 0; x < g.order && r.is_hom; ++x) {
    for (int y = 0; y < g.order; ++y) {
      if (f[g.mul(x, y)] != h.mul(f[x], f[y])) {
        r.is_hom = false;
        r.witness = {x, y};
        break;
      }
    }
  }
  std::set<int> image(f.begin(), f.end());
  r.image.assign(image.begin(), image.end());
  for (int x = 0; x < g.order; ++x) {
    if (f[x] == h.identity) r.kernel.push_back(x);
  }
  return r;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{closure_of(g, {})};
  found.insert(frontier[0]);
  while (!frontier.empty()) {
    auto h = std::move(frontier.back());
    frontier.pop_back();
    std::set<int> members(h.begin(), h.end());
    for (int x = 0; x < g.order; ++x) {
      if (members.count(x)) continue;
      auto gens = h;
      gens.push_back(x);
      auto bigger = closure_of(g, gens);
      if (found.insert(bigger).second) frontier.push_back(bigger);
    }
  }
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

std::optional<std::vector<int>> find_complement(
    const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
  auto info = subgroup_ops(g, normal_subgroup);
  if (!info.is_subgroup || !info.is_normal) {
    throw std::invalid_argument(
        "find_complement: the given set is not a normal subgroup");
  }
  const auto& n = info.closure;
  std::set<int> nset(n.begin(), n.end());
  for (const auto& k : all_subgroups(g)) {
    if (k.size() * n.size() != static_cast<std::size_t>(g.order)) continue;
    int common = 0;
    for (int x : k) {
      if (nset.count(x)) ++common;
    }
    if (common == 1) return k;  // intersection is exactly {e}
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& g,
                                                       const FiniteGroup& h) {
  if (g.order != h.order) return std::nullopt;
  const int m = g.order;
  std::vector<int> og(m), oh(m);
  for (int i = 0; i < m; ++i) og[i] = g.element_order(i);
  for (int i = 0; i < m; ++i) oh[i] = h.element_order(i);
  {
    auto sg = og, sh = oh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }
  std::vector<int> map(m, -1);
  std::vector<bool> used(m, false);
  auto full_hom = [&]() {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
      }
    }
    return true;
  };
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == m) return full_hom();
    for (int w = 0; w < m; ++w) {
      if (used[w] || og[v] != oh[w]) continue;
      map[v] = w;
      used[w] = true;
      // prune on products already determined among assigned elements
      bool ok = true;
      for (int u = 0; u <= v && ok; ++u) {
        if (map[u] == -1) continue;
        const int p1 = g.mul(v, u);
        const int p2 = g.mul(u, v);
        if (map[p1] != -1 && map[p1] != h.mul(w, map[u])) ok = false;
        if (ok && map[p2] != -1 && map[p2] != h.mul(map[u], w)) ok = false;
      }
      if (ok && extend(v + 1)) return true;
      map[v] = -1;
      used[w] = false;
    }
    return false;
  };
  if (extend(0)) return map;
  return std::nullopt;
}

bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_group_isomorphism(g, h).has_value();
}

}  // namespace dtg
