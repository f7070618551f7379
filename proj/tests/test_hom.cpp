#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "dtg/construct.hpp"
#include "dtg/hom.hpp"

using namespace dtg;

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

}  // namespace

TEST_CASE("the projection onto a quotient is an open continuous hom") {
  auto scc16 = fixture("scc16-mod4").dtg;
  auto q = dtg_quotient(scc16, {0, 4, 8, 12});
  std::vector<int> projection(16);
  for (int i = 0; i < 16; ++i) projection[i] = i % 4;

  auto h = check_dtg_hom(scc16, q, projection);
  CHECK(h.is_hom);
  CHECK(h.is_continuous);
  CHECK(is_open_map(h).open);

  auto fi = first_isomorphism(h);
  CHECK(fi.factorization_ok);
  CHECK(fi.is_dtg_isomorphism);
  CHECK(fi.quotient.image.size() == 4);
}

TEST_CASE("the identity from the discrete to the cyclic cross is not open") {
  auto c1 = fixture("cross4-c1").dtg;
  auto c2 = fixture("cross4-c2").dtg;
  auto h = check_dtg_hom(c1, c2, identity_map(4));
  CHECK(h.is_hom);
  CHECK(h.is_continuous);

  auto open = is_open_map(h);
  CHECK_FALSE(open.open);
  // first adjacent image pair in index order: (1,0) and (0,1)
  CHECK(open.witness == std::array<int, 2>{0, 1});

  auto fi = first_isomorphism(h);
  CHECK(fi.factorization_ok);
  CHECK_FALSE(fi.is_dtg_isomorphism);

  // the other direction is not even continuous
  auto back = check_dtg_hom(c2, c1, identity_map(4));
  CHECK(back.is_hom);
  CHECK_FALSE(back.is_continuous);
}

TEST_CASE("maps into the trivial group") {
  auto d = scc_group(6);
  auto trivial = make_dtg(DigitalImage(1, {Point{0}}, Adjacency::cu(1)),
                          cyclic_group(1));
  auto h = check_dtg_hom(d, trivial, std::vector<int>(6, 0));
  CHECK(h.is_hom);
  CHECK(h.is_continuous);
  CHECK(is_open_map(h).open);
  auto fi = first_isomorphism(h);
  CHECK(fi.is_dtg_isomorphism);  // quotient by everything is a point
}

TEST_CASE("digital isomorphisms are open") {
  auto d = scc_group(4);
  auto h = check_dtg_hom(d, d, identity_map(4));
  CHECK(is_open_map(h).open);
  auto fi = first_isomorphism(h);
  CHECK(fi.is_dtg_isomorphism);
  CHECK(fi.quotient.image.size() == 4);
}

TEST_CASE("first isomorphism theorem preconditions") {
  auto d = scc_group(4);
  auto not_hom = check_dtg_hom(d, d, {1, 2, 3, 0});
  CHECK_FALSE(not_hom.is_hom);
  CHECK_THROWS_AS(first_isomorphism(not_hom), std::invalid_argument);
}

TEST_CASE("factorization reproduces the original map") {
  auto scc12 = scc_group(12);
  auto q = dtg_quotient(scc12, {0, 6});
  std::vector<int> projection(12);
  for (int i = 0; i < 12; ++i) projection[i] = i % 6;
  auto h = check_dtg_hom(scc12, q, projection);
  REQUIRE(h.is_hom);
  REQUIRE(h.is_continuous);
  auto fi = first_isomorphism(h);
  CHECK(fi.factorization_ok);
  CHECK(fi.is_dtg_isomorphism);
  // cosets of {0,6} under the quotient labeling: coset_of(x) = x mod 6
  for (int x = 0; x < 12; ++x) {
    CHECK(fi.induced_map[x % 6] == projection[x]);
  }
}

TEST_CASE("continuity from the identity neighborhood") {
  auto scc6 = scc_group(6);

  // doubling on the 6-cycle: a homomorphism, discontinuous already at e
  std::vector<int> doubling(6);
  for (int i = 0; i < 6; ++i) doubling[i] = (2 * i) % 6;
  auto r = continuity_from_identity(scc6, scc6, doubling);
  CHECK_FALSE(r.local_ok);
  CHECK(r.witness == 1);
  CHECK_FALSE(r.global_ok);

  auto t = continuity_from_identity(scc6, scc6, std::vector<int>(6, 0));
  CHECK(t.local_ok);
  CHECK(t.global_ok);

  CHECK_THROWS_AS(continuity_from_identity(scc6, scc6, {1, 2, 3, 4, 5, 0}),
                  std::invalid_argument);

  // local implies global over every endomorphism of small cyclic fixtures
  for (int n : {4, 5, 6, 8}) {
    auto d = scc_group(n);
    for (int k = 0; k < n; ++k) {
      std::vector<int> f(n);
      for (int i = 0; i < n; ++i) f[i] = (k * i) % n;
      auto report = continuity_from_identity(d, d, f);
      if (report.local_ok) CHECK(report.global_ok);
    }
  }
}

TEST_CASE("compositions of checked homs are checked homs") {
  auto scc16 = fixture("scc16-mod4").dtg;
  auto q1 = dtg_quotient(scc16, {0, 8});
  auto q2 = dtg_quotient(q1, {0, 4});

  std::vector<int> p1(16), p2(8);
  for (int i = 0; i < 16; ++i) p1[i] = i % 8;
  for (int i = 0; i < 8; ++i) p2[i] = i % 4;

  auto h1 = check_dtg_hom(scc16, q1, p1);
  auto h2 = check_dtg_hom(q1, q2, p2);
  REQUIRE((h1.is_hom && h1.is_continuous));
  REQUIRE((h2.is_hom && h2.is_continuous));

  std::vector<int> composed(16);
  for (int i = 0; i < 16; ++i) composed[i] = p2[p1[i]];
  auto h = check_dtg_hom(scc16, q2, composed);
  CHECK(h.is_hom);
  CHECK(h.is_continuous);
}
