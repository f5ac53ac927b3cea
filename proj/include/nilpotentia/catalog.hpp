#ifndef NILPOTENTIA_CATALOG_HPP_
#define NILPOTENTIA_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nilpotentia/classify.hpp"
#include "nilpotentia/semigroup.hpp"

namespace nilpotentia {

enum class ExpectedFlag { No, Yes, ToBeDetermined };

// A named construction bundled with the facts the analysis pipeline is
// expected to reproduce.
struct CatalogEntry {
  std::string name;
  Semigroup semigroup;
  bool expected_nilpotent = false;
  ExpectedFlag expected_minimal = ExpectedFlag::ToBeDetermined;
  std::optional<SemigroupType> expected_type;
  std::string provenance;
  std::vector<int> ideal;              // glued ideal members, when applicable
  std::vector<int> expected_offender;  // a known non-nilpotent proper part
};

// Names: u1, u2, f7, u3_nonminimal, u4_nonminimal, u5_c2, and y<n> for
// n >= 5 (e.g. "y5").  Throws BadParameter for anything else.
CatalogEntry catalog_entry(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace nilpotentia

#endif  // NILPOTENTIA_CATALOG_HPP_
