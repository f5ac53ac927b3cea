#ifndef NILPOTENTIA_CENSUS_HPP_
#define NILPOTENTIA_CENSUS_HPP_

#include <cstdint>
#include <vector>

#include "nilpotentia/classify.hpp"
#include "nilpotentia/semigroup.hpp"

namespace nilpotentia {

enum class CensusModulo { Iso, IsoAntiIso };
enum class CensusFilter { All, MinimalNonNilpotent };

struct CensusConfig {
  int order = 1;  // 1..7
  CensusModulo modulo = CensusModulo::Iso;
  int shards = 1;
  CensusFilter filter = CensusFilter::All;
};

// Row-major Cayley table of one canonical representative.
using CensusTable = std::vector<uint8_t>;

// Exhaustive enumeration up to isomorphism (and anti-isomorphism when asked):
// backtracking over table cells with associativity forward-checking and a
// minimality-under-permutation early abort, emitting the lexicographically
// least table of each class, in ascending order.  The search tree is
// partitioned by first-row prefixes; output is independent of both the shard
// count and the thread count.
std::vector<CensusTable> enumerate_semigroups(const CensusConfig& cfg,
                                              int threads = 1);

// Serial baseline without the orderly pruning: complete tables are tested
// for canonicality one by one.  Kept as the reference implementation for
// tests and the benchmark.
std::vector<CensusTable> enumerate_semigroups_reference(int order,
                                                        CensusModulo modulo);

Semigroup census_semigroup(const CensusTable& table, int order);

struct CensusHit {
  Semigroup s;
  Classification classification;
};

// Enumerates, then keeps the minimal non-nilpotent classes with their
// classifications (exhaustive minimality mode).
std::vector<CensusHit> find_minimal_non_nilpotent(const CensusConfig& cfg,
                                                  int threads = 1);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_CENSUS_HPP_
