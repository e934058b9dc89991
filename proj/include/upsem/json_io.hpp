#ifndef UPSEM_JSON_IO_HPP_
#define UPSEM_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "upsem/cayley.hpp"
#include "upsem/extension.hpp"
#include "upsem/hasse.hpp"
#include "upsem/theorems.hpp"
#include "upsem/upfamily.hpp"

namespace upsem {

using json = nlohmann::ordered_json;

// {"order": n, "table": [[..], ..]} with row x holding the products x*y.
json table_to_json(const CayleyTable& t);
CayleyTable table_from_json(const json& j);

// Sorted list of sorted index lists of the minimal members.
json family_to_json(const UpFamily& f);
UpFamily family_from_json(const json& j, int order);

json analysis_to_json(const AnalysisReport& r);
json lattice_analysis_to_json(const LatticeAnalysis& r);
json report_to_json(const TheoremReport& r);
json aggregate_to_json(const AggregateReport& r);
json hasse_to_json(const HasseDiagram& d);

// The memoized product table over carrier indices, as Cayley JSON.
json extension_table_json(const ExtensionSemigroup& e);

// A named carrier ("chain:4", "vee", ...) or a path to a Cayley JSON file.
CayleyTable load_carrier(const std::string& arg);

}  // namespace upsem

#endif  // UPSEM_JSON_IO_HPP_
