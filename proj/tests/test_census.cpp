#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nilpotentia/census.hpp"
#include "nilpotentia/classify.hpp"
#include "nilpotentia/nilpotency.hpp"
#include "nilpotentia/semigroup.hpp"

using namespace nilpotentia;

namespace {

// Brute-force oracle for tiny orders: every table, associativity by triple
// scan, canonical form as the minimum over all relabelings (and transposes).
std::set<std::vector<uint8_t>> brute_force_census(int n, bool anti) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::vector<uint8_t>> classes;
  std::vector<uint8_t> t(n * n, 0);
  const size_t total = [&] {
    size_t x = 1;
    for (int c = 0; c < n * n; ++c) x *= n;
    return x;
  }();
  for (size_t code = 0; code < total; ++code) {
    size_t rest = code;
    for (int c = 0; c < n * n; ++c) {
      t[c] = static_cast<uint8_t>(rest % n);
      rest /= n;
    }
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c = 0; c < n && assoc; ++c)
          assoc = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
    if (!assoc) continue;
    std::vector<uint8_t> best = t;
    std::vector<uint8_t> img(n * n);
    for (const auto& q : perms)
      for (int tr = 0; tr <= (anti ? 1 : 0); ++tr) {
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const int src = tr ? t[b * n + a] : t[a * n + b];
            img[q[a] * n + q[b]] = static_cast<uint8_t>(q[src]);
          }
        best = std::min(best, img);
      }
    classes.insert(best);
  }
  return classes;
}

std::vector<CensusTable> run(int order, CensusModulo modulo, int shards = 1,
                             int threads = 1) {
  CensusConfig cfg;
  cfg.order = order;
  cfg.modulo = modulo;
  cfg.shards = shards;
  return enumerate_semigroups(cfg, threads);
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("tiny orders have the known counts") {
  CHECK(run(1, CensusModulo::Iso).size() == 1);
  CHECK(run(2, CensusModulo::Iso).size() == 5);
  CHECK(run(2, CensusModulo::IsoAntiIso).size() == 4);
  CHECK(run(3, CensusModulo::Iso).size() == 24);
  CHECK(run(3, CensusModulo::IsoAntiIso).size() == 18);
}

TEST_CASE("order <= 3 output equals the brute-force oracle exactly") {
  for (int n : {1, 2, 3}) {
    for (bool anti : {false, true}) {
      const auto oracle = brute_force_census(n, anti);
      const auto got = run(n, anti ? CensusModulo::IsoAntiIso : CensusModulo::Iso);
      const std::set<std::vector<uint8_t>> got_set(got.begin(), got.end());
      CHECK(got.size() == got_set.size());
      CHECK(got_set == oracle);
    }
  }
}

TEST_CASE("order 4 matches the reference enumerator and published counts") {
  const auto orderly = run(4, CensusModulo::Iso);
  CHECK(orderly.size() == 188);
  const auto reference = enumerate_semigroups_reference(4, CensusModulo::Iso);
  CHECK(orderly == reference);
  CHECK(run(4, CensusModulo::IsoAntiIso).size() == 126);
}

TEST_CASE("output is sorted, valid, and pairwise non-isomorphic") {
  const auto tables = run(3, CensusModulo::Iso);
  CHECK(std::is_sorted(tables.begin(), tables.end()));
  std::vector<Semigroup> sgs;
  for (const auto& t : tables) sgs.push_back(census_semigroup(t, 3));
  for (size_t a = 0; a < sgs.size(); ++a)
    for (size_t b = a + 1; b < sgs.size(); ++b)
      CHECK(!is_isomorphic(sgs[a], sgs[b]).has_value());

  // Spot-check random pairs at order 4.
  const auto four = run(4, CensusModulo::Iso);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t a = rng() % four.size(), b = rng() % four.size();
    if (a == b) continue;
    CHECK(!is_isomorphic(census_semigroup(four[a], 4), census_semigroup(four[b], 4))
               .has_value());
  }
}

TEST_CASE("shard and thread counts do not change the output") {
  const auto base = run(4, CensusModulo::Iso, 1, 1);
  for (int shards : {4, 16}) CHECK(run(4, CensusModulo::Iso, shards, 1) == base);
  CHECK(run(4, CensusModulo::Iso, 1, 4) == base);
  CHECK(run(4, CensusModulo::Iso, 4, 4) == base);
}

TEST_CASE("order 2 minimal non-nilpotent classes are the two bands") {
  CensusConfig cfg;
  cfg.order = 2;
  cfg.filter = CensusFilter::MinimalNonNilpotent;
  const auto hits = find_minimal_non_nilpotent(cfg);
  REQUIRE(hits.size() == 2);
  std::set<SemigroupType> verdicts;
  for (const auto& h : hits) verdicts.insert(h.classification.verdict);
  CHECK(verdicts == std::set<SemigroupType>{SemigroupType::U1, SemigroupType::U2});

  cfg.modulo = CensusModulo::IsoAntiIso;
  CHECK(find_minimal_non_nilpotent(cfg).size() == 1);
}

TEST_CASE("orders 3 and 4 have no minimal non-nilpotent semigroup") {
  for (int order : {3, 4}) {
    CensusConfig cfg;
    cfg.order = order;
    cfg.filter = CensusFilter::MinimalNonNilpotent;
    CHECK(find_minimal_non_nilpotent(cfg).empty());
  }
}

TEST_CASE("config validation") {
  CensusConfig cfg;
  cfg.order = 8;
  CHECK_THROWS(enumerate_semigroups(cfg));
  cfg.order = 2;
  cfg.shards = 0;
  CHECK_THROWS(enumerate_semigroups(cfg));
}

}  // TEST_SUITE
