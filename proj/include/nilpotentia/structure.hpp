#ifndef NILPOTENTIA_STRUCTURE_HPP_
#define NILPOTENTIA_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "nilpotentia/nilpotency.hpp"
#include "nilpotentia/semigroup.hpp"

namespace nilpotentia {

// All two-sided ideals: the union-closure of the principal ideals S^1 x S^1,
// sorted by size then lexicographically.  Throws CapExceeded past 2^20
// ideals (degenerate lattices only).
std::vector<std::vector<int>> ideals(const Semigroup& s);

bool is_ideal(const Semigroup& s, const std::vector<int>& members);

// S/I: the complement plus a fresh zero; products landing in I collapse.
Semigroup rees_quotient(const Semigroup& s, const std::vector<int>& ideal);

// Distinct closures of generator sets of size <= max_gens, each with the
// first minimal-size generating set found for it.  The per-level extension
// sweep runs on OpenMP when threads > 1; results are independent of the
// thread count.
std::vector<SubsetClosure> subsemigroups_generated(const Semigroup& s,
                                                   int max_gens,
                                                   int threads = 1);

// Every nonempty product-closed subset, by saturation from single-generator
// closures.  Guarded by the exhaustive cap.
std::vector<std::vector<int>> all_subsemigroups(const Semigroup& s);
std::vector<std::vector<int>> all_subsemigroups(const Semigroup& s, int cap);

// Order cap for exhaustive sweeps; NILPOTENTIA_CAP overrides the default 12.
int exhaustive_cap();

enum class MnnMode { FourGenerator, Exhaustive };

struct MnnOffender {
  enum class Kind { Subsemigroup, Ideal } kind;
  std::vector<int> generators;  // Subsemigroup only
  std::vector<int> members;
};

struct MnnVerdict {
  bool minimal = false;
  std::optional<Witness> witness;  // for S itself, when non-nilpotent
  std::vector<MnnOffender> offenders;
  MnnMode mode = MnnMode::FourGenerator;
};

// Minimal non-nilpotency certificate: S non-nilpotent, every proper Rees
// factor (|I| >= 2) nilpotent, every proper subsemigroup nilpotent.  The
// subsemigroup condition is swept over <=4-generator closures
// (FourGenerator) or over all subsemigroups (Exhaustive).  Rees factors are
// checked through the inclusion-minimal principal ideals, which decide all
// of them.
MnnVerdict is_minimal_non_nilpotent(const Semigroup& s, MnnMode mode,
                                    int threads = 1);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_STRUCTURE_HPP_
