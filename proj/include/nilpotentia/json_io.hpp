#ifndef NILPOTENTIA_JSON_IO_HPP_
#define NILPOTENTIA_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "nilpotentia/catalog.hpp"
#include "nilpotentia/census.hpp"
#include "nilpotentia/classify.hpp"
#include "nilpotentia/groups.hpp"
#include "nilpotentia/rees.hpp"
#include "nilpotentia/semigroup.hpp"
#include "nilpotentia/structure.hpp"

namespace nilpotentia {

using json = nlohmann::json;

json semigroup_to_json(const Semigroup& s);
Semigroup semigroup_from_json(const json& j);

// Sniffs JSON ({"elements":..,"table":..} or an envelope with a "semigroup"
// key) versus the plain-text format (first line n, then n rows of indices).
Semigroup parse_semigroup(const std::string& content);

json witness_to_json(const Semigroup& s, const Witness& w);
Witness witness_from_json(const Semigroup& s, const json& j);

json rees_spec_to_json(const ReesSpec& spec);
ReesSpec rees_spec_from_json(const json& j);

json glue_spec_to_json(const GlueSpec& gs);
GlueSpec glue_spec_from_json(const json& j);

json mnn_to_json(const Semigroup& s, const MnnVerdict& v);
json schmidt_to_json(const SchmidtReport& r);
json nilpotency_to_json(const Semigroup& s, const NilpotencyResult& r);
json classification_to_json(const Semigroup& s, const Classification& c);
json catalog_to_json(const CatalogEntry& e);

}  // namespace nilpotentia

#endif  // NILPOTENTIA_JSON_IO_HPP_
