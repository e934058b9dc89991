#include "upsem/json_io.hpp"

#include <filesystem>
#include <fstream>

#include "upsem/errors.hpp"

namespace upsem {

json table_to_json(const CayleyTable& t) {
  json rows = json::array();
  for (int x = 0; x < t.order; ++x) {
    json row = json::array();
    for (int y = 0; y < t.order; ++y) row.push_back(t.at(x, y));
    rows.push_back(std::move(row));
  }
  return json{{"order", t.order}, {"table", std::move(rows)}};
}

CayleyTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw input_error("Cayley JSON needs \"order\" and \"table\"");
  if (!j["order"].is_number_integer())
    throw input_error("\"order\" must be an integer");
  const int n = j["order"].get<int>();
  if (n < 1 || n > kMaxOrder)
    throw input_error("order must be between 1 and 8");
  const json& rows = j["table"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw input_error("\"table\" must have exactly order rows");
  CayleyTable t(n);
  for (int x = 0; x < n; ++x) {
    if (!rows[x].is_array() || static_cast<int>(rows[x].size()) != n)
      throw input_error("row " + std::to_string(x) + " must have order entries");
    for (int y = 0; y < n; ++y) {
      if (!rows[x][y].is_number_integer())
        throw input_error("table entries must be integers");
      const int v = rows[x][y].get<int>();
      if (v < 0 || v >= n)
        throw input_error("entry (" + std::to_string(x) + "," +
                          std::to_string(y) + ") out of range");
      t.set(x, y, v);
    }
  }
  return t;
}

json family_to_json(const UpFamily& f) {
  json out = json::array();
  for (const SubsetMask m : f.minimal) {
    json set = json::array();
    for (int e : mask_elements(m)) set.push_back(e);
    out.push_back(std::move(set));
  }
  return out;
}

UpFamily family_from_json(const json& j, int order) {
  if (!j.is_array() || j.empty())
    throw input_error("upfamily JSON must be a nonempty list of index lists");
  std::vector<SubsetMask> gens;
  for (const json& set : j) {
    if (!set.is_array())
      throw input_error("upfamily members must be index lists");
    SubsetMask m = 0;
    for (const json& e : set) {
      if (!e.is_number_integer())
        throw input_error("set elements must be integers");
      const int v = e.get<int>();
      if (v < 0 || v >= order)
        throw input_error("element " + std::to_string(v) +
                          " is outside the carrier");
      m |= SubsetMask{1} << v;
    }
    gens.push_back(m);
  }
  return up_closure(order, std::move(gens));
}

json analysis_to_json(const AnalysisReport& r) {
  json j{{"band", r.band},
         {"commutative", r.commutative},
         {"linear", r.linear},
         {"semilattice", r.semilattice},
         {"idempotents", r.idempotent_count}};
  json witnesses = json::object();
  if (r.band_witness)
    witnesses["band"] = json{{"f", family_to_json(r.band_witness->f)},
                             {"ff", family_to_json(r.band_witness->ff)}};
  if (r.commutative_witness)
    witnesses["commutative"] =
        json{{"a", family_to_json(r.commutative_witness->a)},
             {"b", family_to_json(r.commutative_witness->b)},
             {"ab", family_to_json(r.commutative_witness->ab)},
             {"ba", family_to_json(r.commutative_witness->ba)}};
  if (r.linear_witness)
    witnesses["linear"] = json{{"a", family_to_json(r.linear_witness->a)},
                               {"b", family_to_json(r.linear_witness->b)},
                               {"ab", family_to_json(r.linear_witness->ab)}};
  j["witnesses"] = std::move(witnesses);
  j["millis"] = r.millis;
  return j;
}

json lattice_analysis_to_json(const LatticeAnalysis& r) {
  json j{{"lattice", r.is_lattice}};
  if (!r.is_lattice) {
    j["detail"] = r.detail;
    if (r.witness)
      j["witness"] = json{{"a", family_to_json(r.witness->a)},
                          {"b", family_to_json(r.witness->b)}};
  }
  j["millis"] = r.millis;
  return j;
}

json report_to_json(const TheoremReport& r) {
  json j{{"theorem", r.id},
         {"title", r.title},
         {"instances", r.instances},
         {"result", r.verified ? "verified" : "counterexample"}};
  if (r.counterexample) {
    const InstanceWitness& w = *r.counterexample;
    json conditions = json::object();
    for (std::size_t i = 0; i < w.condition_names.size(); ++i)
      conditions[w.condition_names[i]] = static_cast<bool>(w.truth[i]);
    j["witness"] = json{{"instance", table_to_json(w.instance)},
                        {"class", w.instance_class},
                        {"conditions", std::move(conditions)}};
  } else {
    j["witness"] = nullptr;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["millis"] = r.millis;
  return j;
}

json aggregate_to_json(const AggregateReport& r) {
  json reports = json::array();
  for (const TheoremReport& rep : r.reports)
    reports.push_back(report_to_json(rep));
  return json{{"reports", std::move(reports)},
              {"out_of_scope", r.out_of_scope},
              {"all_verified", r.all_verified}};
}

json hasse_to_json(const HasseDiagram& d) {
  json nodes = json::array(), labels = json::array(), edges = json::array();
  for (const UpFamily& f : d.nodes) nodes.push_back(family_to_json(f));
  for (const std::string& l : d.labels) labels.push_back(l);
  for (const auto& [lo, hi] : d.edges) edges.push_back(json::array({lo, hi}));
  return json{{"space", to_string(d.space)},
              {"order", d.base_order},
              {"nodes", std::move(nodes)},
              {"labels", std::move(labels)},
              {"edges", std::move(edges)}};
}

json extension_table_json(const ExtensionSemigroup& e) {
  json rows = json::array();
  for (int i = 0; i < e.size(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < e.size(); ++j2) row.push_back(e.product_index(i, j2));
    rows.push_back(std::move(row));
  }
  return json{{"order", e.size()}, {"table", std::move(rows)}};
}

CayleyTable load_carrier(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw input_error("cannot read carrier file '" + arg + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
      throw input_error("carrier file '" + arg + "' is not valid JSON");
    CayleyTable t = table_from_json(j);
    require_semigroup(t);
    return t;
  }
  CayleyTable t = parse_carrier(arg);
  require_semigroup(t);
  return t;
}

}  // namespace upsem
