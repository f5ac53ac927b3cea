#include <doctest.h>

#include "nilpotentia/catalog.hpp"
#include "nilpotentia/error.hpp"
#include "nilpotentia/groups.hpp"
#include "nilpotentia/nilpotency.hpp"
#include "support.hpp"

using namespace nilpotentia;
using namespace nilpotentia::testing;

TEST_SUITE("groups") {

TEST_CASE("lower central series classes") {
  CHECK(group_nilpotency_class(cyclic(2)) == 1);
  CHECK(group_nilpotency_class(cyclic(6)) == 1);
  CHECK(group_nilpotency_class(klein4()) == 1);
  CHECK(group_nilpotency_class(quaternion8()) == 2);
  CHECK(group_nilpotency_class(dihedral(4)) == 2);
  CHECK(!group_nilpotency_class(symmetric_group(3)).has_value());
  CHECK(!group_nilpotency_class(alternating4()).has_value());
  CHECK(!group_nilpotency_class(dihedral(5)).has_value());
  CHECK(group_nilpotency_class(validate_semigroup({"e"}, {{0}})) == 0);
}

TEST_CASE("non-groups are rejected") {
  CHECK_THROWS_AS(group_nilpotency_class(catalog_entry("u1").semigroup), Error);
  CHECK_THROWS_AS(schmidt_report(null_semigroup2()), Error);
}

TEST_CASE("s3 is a Schmidt group with the expected structure") {
  const SchmidtReport r = schmidt_report(symmetric_group(3));
  CHECK(r.is_group);
  CHECK(r.nonnilpotent);
  CHECK(r.all_proper_subgroups_nilpotent);
  CHECK(r.is_schmidt);
  REQUIRE(r.order_pq);
  CHECK((*r.order_pq)[0] == 3);  // normal Sylow 3
  CHECK((*r.order_pq)[1] == 1);
  CHECK((*r.order_pq)[2] == 2);  // cyclic Sylow 2
  CHECK((*r.order_pq)[3] == 1);
  CHECK(r.normal_sylow_p);
  CHECK(r.cyclic_sylow_q);
  CHECK(r.two_generated);
  CHECK(r.frattini_central);
}

TEST_CASE("a4 is a Schmidt group with normal Sylow 2") {
  const SchmidtReport r = schmidt_report(alternating4());
  CHECK(r.is_schmidt);
  REQUIRE(r.order_pq);
  CHECK((*r.order_pq)[0] == 2);
  CHECK((*r.order_pq)[1] == 2);
  CHECK((*r.order_pq)[2] == 3);
  CHECK((*r.order_pq)[3] == 1);
  CHECK(r.normal_sylow_p);
  CHECK(r.cyclic_sylow_q);
  CHECK(r.two_generated);
  CHECK(r.frattini_central);
}

TEST_CASE("nilpotent groups are not Schmidt") {
  for (const Semigroup& g : {cyclic(6), quaternion8(), dihedral(4), klein4()}) {
    const SchmidtReport r = schmidt_report(g);
    CHECK(!r.nonnilpotent);
    CHECK(!r.is_schmidt);
  }
}

TEST_CASE("schmidt implies the structural corroboration") {
  for (const Semigroup& g : {symmetric_group(3), alternating4(), dihedral(5)}) {
    const SchmidtReport r = schmidt_report(g);
    if (!r.is_schmidt) continue;
    CHECK(r.order_pq.has_value());
    CHECK(r.normal_sylow_p);
    CHECK(r.cyclic_sylow_q);
    CHECK(r.frattini_central);
    CHECK(r.two_generated);
  }
}

TEST_CASE("group corpus: Malcev verdict equals the series oracle") {
  for (const Semigroup& g :
       {cyclic(2), cyclic(3), cyclic(4), cyclic(6), klein4(), symmetric_group(3),
        dihedral(4), quaternion8(), alternating4(), dihedral(5),
        direct_product(cyclic(2), cyclic(4))}) {
    const auto oracle = group_nilpotency_class(g);
    const NilpotencyResult malcev = decide_nilpotent(g);
    CHECK(malcev.nilpotent == oracle.has_value());
    if (oracle) CHECK(malcev.cls == *oracle);
  }
}

}  // TEST_SUITE
