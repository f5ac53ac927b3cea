#include <doctest.h>

#include <random>

#include "nilpotentia/catalog.hpp"
#include "nilpotentia/classify.hpp"
#include "nilpotentia/error.hpp"
#include "nilpotentia/nilpotency.hpp"
#include "support.hpp"

using namespace nilpotentia;
using namespace nilpotentia::testing;

TEST_SUITE("classify") {

TEST_CASE("f7 is of type U3 with k=1 over the trivial group") {
  ClassifyOptions opts;
  opts.mode = MnnMode::Exhaustive;
  opts.verify_all_ideals = true;
  const CatalogEntry f7 = catalog_entry("f7");
  const Classification c = classify(f7.semigroup, opts);
  CHECK(c.verdict == SemigroupType::U3);
  REQUIRE(c.u3);
  CHECK(c.u3->k == 1);
  CHECK(f7.semigroup.label(c.u3->u) == "u");
  CHECK(c.dec->spec.group.size() == 1);
  CHECK(c.ideal == f7.ideal);
}

TEST_CASE("u5_c2 is of type U5") {
  const Classification c = classify(catalog_entry("u5_c2").semigroup);
  CHECK(c.verdict == SemigroupType::U5);
  REQUIRE(c.u5);
  CHECK(c.dec->spec.rows == 4);
  CHECK(c.dec->spec.group.size() == 2);
}

TEST_CASE("groups classify as Schmidt or nilpotent") {
  const Classification s3 = classify(symmetric_group(3));
  CHECK(s3.verdict == SemigroupType::Schmidt);
  REQUIRE(s3.schmidt);
  CHECK(s3.schmidt->is_schmidt);

  const Classification c2 = classify(cyclic(2));
  CHECK(c2.verdict == SemigroupType::Nilpotent);
  CHECK(c2.nilpotency_class == 1);
}

TEST_CASE("two-element bands split into U1 and U2") {
  CHECK(classify(catalog_entry("u1").semigroup).verdict == SemigroupType::U1);
  CHECK(classify(catalog_entry("u2").semigroup).verdict == SemigroupType::U2);
}

TEST_CASE("the non-minimal constructions report verified offenders") {
  for (const char* name : {"u3_nonminimal", "u4_nonminimal"}) {
    const CatalogEntry e = catalog_entry(name);
    const Classification c = classify(e.semigroup);
    CHECK(c.verdict == SemigroupType::NotMinimal);
    bool expected_found = false;
    for (const auto& o : c.offenders)
      expected_found = expected_found || o.members == e.expected_offender;
    CHECK(expected_found);
  }
}

TEST_CASE("y5 is not minimal: the rows 1..4 part is a proper obstruction") {
  const CatalogEntry y5 = catalog_entry("y5");
  const Classification c = classify(y5.semigroup);
  CHECK(c.verdict == SemigroupType::NotMinimal);
  bool expected_found = false;
  for (const auto& o : c.offenders)
    expected_found = expected_found || o.members == y5.expected_offender;
  CHECK(expected_found);
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937 rng(5);
  for (const char* name : {"f7", "u5_c2"}) {
    const Semigroup s = catalog_entry(name).semigroup;
    const Classification base = classify(s);
    std::vector<int> perm(s.size());
    for (int i = 0; i < s.size(); ++i) perm[i] = i;
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Classification c = classify(permute(s, perm));
      CHECK(c.verdict == base.verdict);
      if (base.u3) {
        REQUIRE(c.u3);
        CHECK(c.u3->k == base.u3->k);
      }
      if (base.u5) {
        REQUIRE(c.u5);
        CHECK(c.dec->spec.group.size() == base.dec->spec.group.size());
      }
    }
  }
}

TEST_CASE("minimal_image of f7 is minimal non-nilpotent") {
  const CatalogEntry f7 = catalog_entry("f7");
  const ReesDecomposition dec = rees_decompose(f7.semigroup, f7.ideal);
  const auto [image, hom] = minimal_image(f7.semigroup, dec);
  CHECK(image.size() == 7);  // Gamma is injective here
  CHECK(is_minimal_non_nilpotent(image, MnnMode::Exhaustive).minimal);
  for (int a = 0; a < f7.semigroup.size(); ++a)
    for (int b = 0; b < f7.semigroup.size(); ++b)
      CHECK(hom[f7.semigroup.product(a, b)] == image.product(hom[a], hom[b]));
}

TEST_CASE("minimal_image of an inverse Rees semigroup is itself") {
  ReesSpec spec;
  spec.group = validate_semigroup({"e"}, {{0}});
  spec.rows = spec.cols = 2;
  spec.sandwich = {{0, -1}, {-1, 0}};
  spec.with_zero = true;
  const BuiltRees built = build_rees(spec);
  std::vector<int> all(built.s.size());
  for (int i = 0; i < built.s.size(); ++i) all[i] = i;
  const auto [image, hom] = minimal_image(built.s, rees_decompose(built.s, all));
  CHECK(image.size() == built.s.size());
  CHECK(is_isomorphic(image, built.s).has_value());
}

TEST_CASE("minimal_image of u5_c2 is minimal non-nilpotent") {
  const CatalogEntry e = catalog_entry("u5_c2");
  const ReesDecomposition dec = rees_decompose(e.semigroup, e.ideal);
  const auto [image, hom] = minimal_image(e.semigroup, dec);
  CHECK(image.size() == 19);  // Gamma collapses the C2 fibres of the ideal
  CHECK(is_minimal_non_nilpotent(image, MnnMode::FourGenerator).minimal);
}

TEST_CASE("minimal_image of y5 inherits the obstruction") {
  const CatalogEntry e = catalog_entry("y5");
  const ReesDecomposition dec = rees_decompose(e.semigroup, e.ideal);
  const auto [image, hom] = minimal_image(e.semigroup, dec);
  CHECK(!is_minimal_non_nilpotent(image, MnnMode::FourGenerator).minimal);
}

TEST_CASE("nilpotent inputs short-circuit") {
  const Classification c = classify(null_semigroup2());
  CHECK(c.verdict == SemigroupType::Nilpotent);
  CHECK(c.nilpotency_class == 1);
  CHECK(!c.witness);
}

}  // TEST_SUITE
