#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dtg/group.hpp"

using namespace dtg;

namespace {

// Oracle: decide the three group axioms by direct scanning, independent of
// validate_group's control flow.
bool is_group_table_oracle(const std::vector<std::vector<int>>& t) {
  const int m = static_cast<int>(t.size());
  int identity = -1;
  for (int e = 0; e < m && identity == -1; ++e) {
    bool ok = true;
    for (int i = 0; i < m; ++i) ok = ok && t[e][i] == i && t[i][e] == i;
    if (ok) identity = e;
  }
  if (identity == -1) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (t[t[i][j]][k] != t[i][t[j][k]]) return false;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    bool has = false;
    for (int j = 0; j < m; ++j) {
      has = has || (t[i][j] == identity && t[j][i] == identity);
    }
    if (!has) return false;
  }
  return true;
}

std::vector<std::vector<int>> table_from_digits(int m, long long code) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t[i][j] = static_cast<int>(code % m);
      code /= m;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("validation of standard tables") {
  auto z4 = validate_group(cyclic_group(4).table);
  REQUIRE(z4.ok());
  CHECK(z4.group->identity == 0);
  CHECK(z4.group->inverse == std::vector<int>{0, 3, 2, 1});

  auto d8 = dihedral_8();
  auto again = validate_group(d8.table);
  REQUIRE(again.ok());
  CHECK(again.group->identity == 0);
}

TEST_CASE("rejections carry witnesses") {
  // 2x2 table with a repeated row: 1 has no inverse once 0 is the identity
  auto bad = validate_group({{0, 1}, {1, 1}});
  CHECK_FALSE(bad.ok());
  CHECK((bad.defect == GroupDefect::NotAssociative ||
         bad.defect == GroupDefect::NoInverse ||
         bad.defect == GroupDefect::NoIdentity));

  auto shape = validate_group({{0, 1}, {0}});
  CHECK(shape.defect == GroupDefect::BadShape);

  auto range = validate_group({{0, 2}, {1, 0}});
  CHECK(range.defect == GroupDefect::BadShape);
}

TEST_CASE("validate_group accepts exactly the axiom-satisfying tables") {
  for (int m = 2; m <= 3; ++m) {
    long long total = 1;
    for (int i = 0; i < m * m; ++i) total *= m;
    for (long long code = 0; code < total; ++code) {
      auto t = table_from_digits(m, code);
      CHECK(validate_group(t).ok() == is_group_table_oracle(t));
    }
  }
}

TEST_CASE("dihedral table entries") {
  auto d8 = dihedral_8();
  // indices: e=0, r=1, r2=2, r3=3, s=4, rs=5, r2s=6, r3s=7
  CHECK(d8.mul(1, 4) == 5);  // r*s = rs
  CHECK(d8.mul(4, 1) == 7);  // s*r = r3*s
  CHECK(d8.mul(4, 4) == 0);
  CHECK(d8.inv(5) == 5);  // rs is an involution
  CHECK(d8.names[7] == "r3s");

  CHECK(cyclic_group(1).order == 1);
  CHECK_THROWS_AS(cyclic_group(0), std::invalid_argument);
}

TEST_CASE("subgroup closure, normality, symmetric generating sets") {
  auto z16 = cyclic_group(16);
  auto info = subgroup_ops(z16, {4});
  CHECK(info.closure == std::vector<int>{0, 4, 8, 12});
  CHECK_FALSE(info.is_subgroup);
  CHECK(info.is_normal);

  auto d8 = dihedral_8();
  auto r = subgroup_ops(d8, {1});
  CHECK(r.closure == std::vector<int>{0, 1, 2, 3});
  CHECK(r.is_normal);

  auto s = subgroup_ops(d8, {4});
  CHECK(s.closure == std::vector<int>{0, 4});
  CHECK_FALSE(s.is_normal);  // r s r^-1 = r2 s

  CHECK(subgroup_ops(d8, {1, 3}).is_symmetric_genset);
  CHECK_FALSE(subgroup_ops(d8, {1}).is_symmetric_genset);  // misses r3
  CHECK_FALSE(subgroup_ops(d8, {0, 4}).is_symmetric_genset);

  // closure is idempotent
  for (const auto& gens :
       std::vector<std::vector<int>>{{1}, {4}, {1, 4}, {5}, {2, 6}}) {
    auto once = subgroup_ops(d8, gens).closure;
    CHECK(subgroup_ops(d8, once).closure == once);
    CHECK(subgroup_ops(d8, once).is_subgroup);
  }
}

TEST_CASE("quotient groups") {
  auto z16 = cyclic_group(16);
  auto q = quotient_group(z16, {0, 4, 8, 12});
  CHECK(q.group.order == 4);
  CHECK(groups_isomorphic(q.group, cyclic_group(4)));
  CHECK(q.representatives == std::vector<int>{0, 1, 2, 3});

  // the canonical projection is a homomorphism with kernel N
  auto proj = hom_check(z16, q.group, q.coset_of);
  CHECK(proj.is_hom);
  CHECK(proj.kernel == std::vector<int>{0, 4, 8, 12});

  auto d8 = dihedral_8();
  CHECK(quotient_group(d8, {0}).group.order == 8);
  CHECK(groups_isomorphic(quotient_group(d8, {0}).group, d8));
  CHECK(quotient_group(d8, {0, 1, 2, 3}).group.order == 2);

  CHECK_THROWS_AS(quotient_group(d8, {0, 4}), std::invalid_argument);
}

TEST_CASE("hom_check") {
  auto z4 = cyclic_group(4);
  auto id = hom_check(z4, z4, {0, 1, 2, 3});
  CHECK(id.is_hom);
  CHECK(id.kernel == std::vector<int>{0});
  CHECK(id.image.size() == 4);

  auto z2 = cyclic_group(2);
  auto mod2 = hom_check(z4, z2, {0, 1, 0, 1});
  CHECK(mod2.is_hom);
  CHECK(mod2.kernel == std::vector<int>{0, 2});

  auto shift = hom_check(z4, z4, {1, 2, 3, 0});
  CHECK_FALSE(shift.is_hom);

  // order = kernel size * image size over all maps Z4 -> Z4
  for (int code = 0; code < 256; ++code) {
    std::vector<int> f{code % 4, (code / 4) % 4, (code / 16) % 4,
                       (code / 64) % 4};
    auto r = hom_check(z4, z4, f);
    if (r.is_hom) {
      CHECK(static_cast<std::size_t>(z4.order) ==
            r.kernel.size() * r.image.size());
    }
  }
}

TEST_CASE("subgroup enumeration and complements") {
  auto z4 = cyclic_group(4);
  CHECK(all_subgroups(z4).size() == 3);

  auto d8 = dihedral_8();
  auto subs = all_subgroups(d8);
  CHECK(subs.size() == 10);
  {
    // oracle: scan all subsets for the subgroup axioms
    int count = 0;
    for (unsigned mask = 0; mask < 256; ++mask) {
      if (!(mask & 1)) continue;  // must contain the identity (index 0)
      std::vector<int> members;
      for (int i = 0; i < 8; ++i) {
        if (mask & (1u << i)) members.push_back(i);
      }
      std::set<int> set(members.begin(), members.end());
      bool closed = true;
      for (int a : members) {
        closed = closed && set.count(d8.inv(a));
        for (int b : members) closed = closed && set.count(d8.mul(a, b));
      }
      if (closed) ++count;
    }
    CHECK(count == static_cast<int>(subs.size()));
  }

  CHECK(find_complement(d8, {0, 1, 2, 3}) == std::vector<int>{0, 4});
  CHECK_FALSE(find_complement(z4, {0, 2}).has_value());
  CHECK(find_complement(d8, {0}) ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("group isomorphism search") {
  CHECK(groups_isomorphic(cyclic_group(4), cyclic_group(4)));
  CHECK_FALSE(groups_isomorphic(cyclic_group(4),
                                direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK_FALSE(groups_isomorphic(dihedral_8(), cyclic_group(8)));
  CHECK(groups_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)),
                          cyclic_group(6)));

  auto found = find_group_isomorphism(cyclic_group(6),
                                      direct_product(cyclic_group(2),
                                                     cyclic_group(3)));
  REQUIRE(found.has_value());
  auto z6 = cyclic_group(6);
  auto z2z3 = direct_product(cyclic_group(2), cyclic_group(3));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      CHECK((*found)[z6.mul(a, b)] == z2z3.mul((*found)[a], (*found)[b]));
    }
  }
}
