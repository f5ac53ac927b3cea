#include <doctest.h>

#include <set>

#include "nilpotentia/catalog.hpp"
#include "nilpotentia/error.hpp"
#include "nilpotentia/census.hpp"
#include "nilpotentia/groups.hpp"
#include "nilpotentia/nilpotency.hpp"
#include "nilpotentia/structure.hpp"
#include "support.hpp"

using namespace nilpotentia;
using namespace nilpotentia::testing;

namespace {

// S^m as an element set.
std::vector<std::set<int>> power_chain(const Semigroup& s, int up_to) {
  std::set<int> all;
  for (int i = 0; i < s.size(); ++i) all.insert(i);
  std::vector<std::set<int>> chain{all};
  for (int m = 2; m <= up_to; ++m) {
    std::set<int> next;
    for (int a : chain.back())
      for (int b = 0; b < s.size(); ++b) next.insert(s.product(a, b));
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace

TEST_SUITE("nilpotency") {

TEST_CASE("lambda_rho base cases and the u1 swap") {
  const Semigroup u1 = catalog_entry("u1").semigroup;
  const int e = 0, f = 1, one = u1.size();  // adjoined identity
  CHECK(lambda_rho(u1, e, f, {}) == std::make_pair(e, f));
  CHECK(lambda_rho(u1, e, f, {one}) == std::make_pair(f, e));
  CHECK(lambda_rho(u1, e, f, {one, one}) == std::make_pair(e, f));
  CHECK_THROWS_AS(lambda_rho(u1, e, f, {5}), Error);
}

TEST_CASE("u1 yields the canonical witness (e,f,[1,1])") {
  const Semigroup u1 = catalog_entry("u1").semigroup;
  const NilpotencyResult r = decide_nilpotent(u1);
  REQUIRE(!r.nilpotent);
  REQUIRE(r.witness);
  CHECK(r.witness->x == 0);
  CHECK(r.witness->y == 1);
  CHECK(r.witness->ws == std::vector<int>{2, 2});  // adjoined identity twice
  CHECK(verify_witness(u1, *r.witness));
}

TEST_CASE("commutative semigroups have class 1") {
  for (const Semigroup& s : {cyclic(4), null_semigroup2(), semilattice2(), cyclic(6)}) {
    const NilpotencyResult r = decide_nilpotent(s);
    CHECK(r.nilpotent);
    CHECK(r.cls == 1);
  }
}

TEST_CASE("trivial semigroup has class 0") {
  const Semigroup one = validate_semigroup({"e"}, {{0}});
  CHECK(decide_nilpotent(one).cls == 0);
  CHECK(nilpotency_class(one) == 0);
}

TEST_CASE("s3 is not nilpotent and matches the group oracle") {
  const Semigroup s3 = symmetric_group(3);
  CHECK(!decide_nilpotent(s3).nilpotent);
  CHECK(!group_nilpotency_class(s3).has_value());
  CHECK(!nilpotency_class(s3).has_value());
}

TEST_CASE("d4 and q8 have class 2") {
  CHECK(nilpotency_class(dihedral(4)) == 2);
  CHECK(nilpotency_class(quaternion8()) == 2);
  CHECK(group_nilpotency_class(dihedral(4)) == 2);
  CHECK(group_nilpotency_class(quaternion8()) == 2);
}

TEST_CASE("verify_witness rejects wrong words and diagonal pairs") {
  const Semigroup u1 = catalog_entry("u1").semigroup;
  CHECK(!verify_witness(u1, Witness{0, 1, {2}}));   // lambda_1 = f != e
  CHECK(!verify_witness(u1, Witness{0, 0, {2, 2}}));
  CHECK(!verify_witness(u1, Witness{0, 1, {}}));
}

TEST_CASE("decision and class computation agree on the small census") {
  for (int order = 1; order <= 5; ++order) {
    CensusConfig cfg;
    cfg.order = order;
    for (const CensusTable& t : enumerate_semigroups(cfg)) {
      const Semigroup s = census_semigroup(t, order);
      const NilpotencyResult r = decide_nilpotent(s);
      const auto cls = nilpotency_class(s);
      CHECK(r.nilpotent == cls.has_value());
      if (r.nilpotent) CHECK(r.cls == *cls);
      if (!r.nilpotent) CHECK(verify_witness(s, *r.witness));
    }
  }
}

TEST_CASE("power-nilpotent semigroups have class at most m") {
  // T-parts of the glued families are power-nilpotent.
  for (const char* name : {"y5", "y6"}) {
    const CatalogEntry e = catalog_entry(name);
    const Semigroup t = rees_quotient(e.semigroup, e.ideal);
    const auto chain = power_chain(t, t.size() + 1);
    int m = -1;
    for (size_t k = 0; k < chain.size(); ++k)
      if (chain[k].size() == 1) {
        m = static_cast<int>(k) + 1;
        break;
      }
    REQUIRE(m != -1);  // T^m = {theta}
    const auto cls = nilpotency_class(t);
    REQUIRE(cls.has_value());
    CHECK(*cls <= m);
  }
}

TEST_CASE("heredity: subsemigroups and quotients of nilpotent semigroups") {
  for (const Semigroup& s : {cyclic(6), klein4(), semilattice2()}) {
    REQUIRE(decide_nilpotent(s).nilpotent);
    for (const auto& members : all_subsemigroups(s))
      CHECK(decide_nilpotent(subsemigroup(s, members)).nilpotent);
    for (const auto& ideal : ideals(s))
      CHECK(decide_nilpotent(rees_quotient(s, ideal)).nilpotent);
  }
}

TEST_CASE("ideal lifting: power-null ideal plus nilpotent quotient") {
  // If I^n = {theta} and S/I is nilpotent then S is nilpotent; checked over
  // every ideal of a mixed corpus.
  std::vector<Semigroup> corpus{null_semigroup2(), semilattice2(),
                                catalog_entry("u1").semigroup};
  const CatalogEntry y5 = catalog_entry("y5");
  corpus.push_back(rees_quotient(y5.semigroup, y5.ideal));
  for (const Semigroup& s : corpus) {
    for (const auto& members : ideals(s)) {
      const Semigroup sub = subsemigroup(s, members);
      const auto chain = power_chain(sub, sub.size() + 1);
      const bool power_null = chain.back().size() == 1 && sub.zero().has_value();
      if (!power_null) continue;
      if (decide_nilpotent(rees_quotient(s, members)).nilpotent)
        CHECK(decide_nilpotent(s).nilpotent);
    }
  }
}

TEST_CASE("pair graph shape") {
  for (const Semigroup& s : {catalog_entry("f7").semigroup, cyclic(4)}) {
    const PairGraph g(s, WitnessScope::MonoidS1);
    CHECK(g.label_count() == s.monoid_size());
    // The diagonal is closed under edges.
    for (int x = 0; x < s.size(); ++x)
      for (int w = 0; w < g.label_count(); ++w)
        CHECK(g.diagonal(g.successor(g.node(x, x), w)));
  }
}

TEST_CASE("the S-only diagnostic variant") {
  const Semigroup u1 = catalog_entry("u1").semigroup;
  const NilpotencyResult r = decide_nilpotent(u1, WitnessScope::SemigroupOnly);
  CHECK(!r.nilpotent);
  for (int w : r.witness->ws) CHECK(w < u1.size());
  CHECK(decide_nilpotent(cyclic(4), WitnessScope::SemigroupOnly).nilpotent);
}

}  // TEST_SUITE
