#include <doctest.h>

#include <random>

#include "nilpotentia/catalog.hpp"
#include "nilpotentia/error.hpp"
#include "nilpotentia/semigroup.hpp"
#include "support.hpp"

using namespace nilpotentia;
using namespace nilpotentia::testing;

TEST_SUITE("semigroup") {

TEST_CASE("u1 band validates with no zero and no identity") {
  const Semigroup s = validate_semigroup({"e", "f"}, {{0, 1}, {0, 1}});
  CHECK(s.size() == 2);
  CHECK(!s.zero());
  CHECK(!s.identity());
  CHECK(s.product(0, 1) == 1);  // ef = f
  CHECK(s.product(1, 0) == 0);  // fe = e
}

TEST_CASE("non-associative table is rejected with a failing triple") {
  // xy = y except yy = x; then (yy)y = xy = y but y(yy) = yx = x.
  CHECK_THROWS_AS(validate_semigroup({"x", "y"}, {{0, 1}, {0, 0}}).size(),
                  Error);
  try {
    validate_semigroup({"x", "y"}, {{0, 1}, {0, 0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAssociative);
  }
}

TEST_CASE("bad shapes are rejected") {
  CHECK_THROWS_AS(validate_semigroup({"a"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(validate_semigroup({"a", "a"}, {{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(validate_semigroup({"a", "b"}, {{0, 2}, {0, 0}}), Error);
}

TEST_CASE("identity and zero detection") {
  const Semigroup c2 = cyclic(2);
  REQUIRE(c2.identity());
  CHECK(*c2.identity() == 0);
  const Semigroup null2 = null_semigroup2();
  REQUIRE(null2.zero());
  CHECK(*null2.zero() == 1);
  CHECK(null2.identity_adjoined());
  CHECK(c2.monoid_size() == 2);
  CHECK(null2.monoid_size() == 3);
}

TEST_CASE("adjoin_identity") {
  const Semigroup c2 = cyclic(2);
  CHECK(adjoin_identity(c2) == c2);

  const Semigroup u1 = catalog_entry("u1").semigroup;
  const Semigroup u1m = adjoin_identity(u1);
  CHECK(u1m.size() == 3);
  REQUIRE(u1m.identity());

  const Semigroup n2 = null_semigroup2();
  CHECK(adjoin_identity(n2).size() == 3);

  // Idempotent up to isomorphism (here: equality).
  CHECK(adjoin_identity(u1m) == u1m);
  CHECK(is_isomorphic(adjoin_identity(adjoin_identity(u1)), adjoin_identity(u1))
            .has_value());
}

TEST_CASE("closure saturates products") {
  const Semigroup c4 = cyclic(4);
  CHECK(closure(c4, {1}).members == std::vector<int>{0, 1, 2, 3});

  const Semigroup u1 = catalog_entry("u1").semigroup;
  CHECK(closure(u1, {0}).members == std::vector<int>{0});

  CHECK_THROWS_AS(closure(c4, {}), Error);
  CHECK_THROWS_AS(closure(c4, {7}), Error);
}

TEST_CASE("closure of one ideal element and u regenerates f7") {
  const Semigroup f7 = catalog_entry("f7").semigroup;
  const int m = f7.index_of("(e;1,2)");
  const int u = f7.index_of("u");
  REQUIRE(m != -1);
  REQUIRE(u != -1);
  CHECK(static_cast<int>(closure(f7, {m, u}).members.size()) == f7.size());
}

TEST_CASE("closure is idempotent") {
  std::mt19937 rng(7);
  for (const Semigroup& s : {catalog_entry("f7").semigroup, dihedral(4), cyclic(6)}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> gens;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < count; ++k) gens.push_back(static_cast<int>(rng() % s.size()));
      const auto once = closure(s, gens);
      CHECK(closure(s, once.members).members == once.members);
    }
  }
}

TEST_CASE("isomorphism testing") {
  const Semigroup u1 = catalog_entry("u1").semigroup;
  const Semigroup u2 = catalog_entry("u2").semigroup;
  CHECK(is_isomorphic(u1, u1).has_value());
  CHECK(!is_isomorphic(u1, u2).has_value());  // anti-isomorphic only
  CHECK(is_isomorphic(u1, opposite(u2)).has_value());

  const Semigroup c3 = cyclic(3);
  const Semigroup c3r = permute(c3, {2, 0, 1});
  const auto iso = is_isomorphic(c3, c3r);
  REQUIRE(iso.has_value());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK((*iso)[c3.product(a, b)] == c3r.product((*iso)[a], (*iso)[b]));

  CHECK(!is_isomorphic(cyclic(4), klein4()).has_value());
}

TEST_CASE("isomorphism is reflexive on every catalog entry") {
  for (const std::string& name : catalog_names())
    CHECK(is_isomorphic(catalog_entry(name).semigroup, catalog_entry(name).semigroup)
              .has_value());
}

TEST_CASE("isomorphism is symmetric on randomized pairs") {
  std::mt19937 rng(11);
  const Semigroup base = catalog_entry("f7").semigroup;
  std::vector<int> perm(base.size());
  for (int i = 0; i < base.size(); ++i) perm[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Semigroup other = permute(base, perm);
    CHECK(is_isomorphic(base, other).has_value());
    CHECK(is_isomorphic(other, base).has_value());
  }
}

TEST_CASE("idempotents and group detection") {
  const Semigroup u1 = catalog_entry("u1").semigroup;
  CHECK(idempotents(u1) == std::vector<int>{0, 1});
  CHECK(is_group(symmetric_group(3)));
  CHECK(!is_group(u1));
  CHECK(is_group(quaternion8()));
  CHECK(!is_group(null_semigroup2()));
}

TEST_CASE("subsemigroup restriction keeps labels and rejects open sets") {
  const Semigroup c4 = cyclic(4);
  const Semigroup sub = subsemigroup(c4, {0, 2});
  CHECK(sub.size() == 2);
  CHECK(sub.label(1) == "g^2");
  CHECK_THROWS_AS(subsemigroup(c4, {1}), Error);  // g*g escapes
}

}  // TEST_SUITE
