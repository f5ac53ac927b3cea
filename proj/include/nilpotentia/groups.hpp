#ifndef NILPOTENTIA_GROUPS_HPP_
#define NILPOTENTIA_GROUPS_HPP_

#include <array>
#include <optional>
#include <vector>

#include "nilpotentia/semigroup.hpp"

namespace nilpotentia {

// Lower-central-series nilpotency oracle.  Returns the class, or nullopt
// when the series stabilises above the trivial subgroup.  Throws NotAGroup.
std::optional<int> group_nilpotency_class(const Semigroup& g);

struct SchmidtReport {
  bool is_group = false;
  bool nonnilpotent = false;
  std::optional<std::array<int, 4>> order_pq;  // p, a, q, b with |G| = p^a q^b
  bool normal_sylow_p = false;
  bool cyclic_sylow_q = false;
  bool frattini_central = false;
  bool two_generated = false;
  bool all_proper_subgroups_nilpotent = false;
  bool is_schmidt = false;
};

// Full report on a finite group of order <= 24 (subgroup enumeration by
// closure sweep).  is_schmidt is decided from the definition — a
// non-nilpotent group all of whose proper subgroups are nilpotent — with the
// structural properties reported as corroboration.  When the order has two
// prime divisors, p is the one whose Sylow subgroup is normal (the smaller
// prime on a tie).
SchmidtReport schmidt_report(const Semigroup& g);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_GROUPS_HPP_
