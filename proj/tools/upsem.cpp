// Workbench CLI: enumerate extension spaces, check algebraic properties of
// extension semigroups, multiply upfamilies, verify the theorem catalog, and
// emit Hasse diagrams.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "upsem/enumerate.hpp"
#include "upsem/errors.hpp"
#include "upsem/extension.hpp"
#include "upsem/hasse.hpp"
#include "upsem/json_io.hpp"
#include "upsem/theorems.hpp"

namespace {

using upsem::json;

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw upsem::input_error("cannot write to '" + path + "'");
  out << text;
}

int cmd_enumerate(const std::string& carrier, const std::string& space,
                  bool count_only, const std::string& out_path) {
  const upsem::CayleyTable t = upsem::load_carrier(carrier);
  const upsem::SpaceKind kind = upsem::parse_space(space);
  const auto families = upsem::enumerate_space(kind, t.order, upsem::Caps::defaults());
  if (count_only) {
    write_or_print(out_path, std::to_string(families.size()));
    return 0;
  }
  std::string lines;
  for (const upsem::UpFamily& f : families)
    lines += upsem::family_to_json(f).dump() + "\n";
  write_or_print(out_path, lines);
  return 0;
}

int cmd_check(const std::string& carrier, const std::string& space,
              const std::string& property, const std::string& analysis_out,
              const std::string& table_out) {
  const upsem::CayleyTable t = upsem::load_carrier(carrier);
  const upsem::SpaceKind kind = upsem::parse_space(space);
  const upsem::Caps caps = upsem::Caps::defaults();

  json result{{"carrier", upsem::table_to_json(t)},
              {"space", space},
              {"property", property}};
  bool holds = false;

  if (property == "lattice") {
    const auto join = upsem::join_table_of(t);
    if (!join)
      throw upsem::input_error("carrier is not a lattice: some pair has no join");
    const upsem::LatticeAnalysis la =
        upsem::analyze_lattice_extension(t, *join, kind, caps);
    holds = la.is_lattice;
    result["result"] = upsem::lattice_analysis_to_json(la);
  } else if (property.rfind("clifford:", 0) == 0) {
    const std::string args = property.substr(9);
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw upsem::input_error("clifford property needs two exponents, e.g. clifford:1,2");
    const int cn = std::stoi(args.substr(0, comma));
    const int cm = std::stoi(args.substr(comma + 1));
    if (t.order > caps.scan_cap(kind))
      throw upsem::cap_error("Clifford scan above the product cap for " + space);
    const upsem::SpaceCarrier sc = upsem::make_carrier(kind, t.order, caps);
    const auto w = upsem::find_nm_clifford_violation(t, sc, cn, cm);
    holds = !w.has_value();
    json r{{"holds", holds}};
    if (w) r["witness"] = upsem::family_to_json(*w);
    result["result"] = std::move(r);
  } else if (property == "band" || property == "commutative" ||
             property == "linear" || property == "semilattice") {
    if (t.order > caps.scan_cap(kind))
      throw upsem::cap_error("property scan above the product cap for " + space);
    const upsem::SpaceCarrier sc = upsem::make_carrier(kind, t.order, caps);
    json r{{"holds", true}};
    auto witness_pair = [&r](const auto& w, const char* kind_name) {
      r["holds"] = false;
      r["witness"] = json{{"kind", kind_name},
                          {"a", upsem::family_to_json(w.a)},
                          {"b", upsem::family_to_json(w.b)}};
    };
    if (property == "band" || property == "semilattice") {
      if (const auto w = upsem::find_band_violation(t, sc)) {
        r["holds"] = false;
        r["witness"] = json{{"kind", "band"},
                            {"f", upsem::family_to_json(w->f)},
                            {"ff", upsem::family_to_json(w->ff)}};
      }
    }
    if (r["holds"] && (property == "commutative" || property == "semilattice")) {
      if (const auto w = upsem::find_commutativity_violation(t, sc))
        witness_pair(*w, "commutative");
    }
    if (property == "linear") {
      if (const auto w = upsem::find_linearity_violation(t, sc))
        witness_pair(*w, "linear");
    }
    holds = r["holds"].get<bool>();
    result["result"] = std::move(r);
    if (!analysis_out.empty())
      write_or_print(analysis_out,
                     upsem::analysis_to_json(upsem::analyze_space(t, sc)).dump(2) + "\n");
  } else {
    throw upsem::input_error(
        "unknown property '" + property +
        "' (band, commutative, linear, semilattice, lattice, clifford:n,m)");
  }
  result["holds"] = holds;
  std::cout << result.dump(2) << "\n";
  if (!table_out.empty()) {
    const upsem::ExtensionSemigroup e = upsem::build_extension(t, kind, caps);
    write_or_print(table_out, upsem::extension_table_json(e).dump() + "\n");
  }
  return holds ? 0 : 1;
}

int cmd_product(const std::string& carrier, const std::string& a_path,
                const std::string& b_path) {
  const upsem::CayleyTable t = upsem::load_carrier(carrier);
  auto read_family = [&](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw upsem::input_error("cannot read '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
      throw upsem::input_error("'" + path + "' is not valid JSON");
    return upsem::family_from_json(j, t.order);
  };
  const upsem::UpFamily a = read_family(a_path);
  const upsem::UpFamily b = read_family(b_path);
  std::cout << upsem::family_to_json(upsem::product(a, b, t)).dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& theorem, int max_order,
               const std::string& report_path) {
  upsem::Caps caps = upsem::Caps::defaults();
  if (max_order > 0) caps = caps.clamped(max_order);
  json report_json;
  bool ok = true;
  if (theorem == "all") {
    const upsem::AggregateReport agg = upsem::verify_all(caps);
    for (const upsem::TheoremReport& r : agg.reports)
      std::cout << "theorem " << r.id << ": "
                << (r.verified ? "verified" : "COUNTEREXAMPLE") << " ("
                << r.instances << " instances, " << static_cast<long>(r.millis)
                << " ms)\n";
    std::cout << (agg.all_verified ? "all theorems verified"
                                   : "counterexamples found")
              << "\n";
    report_json = upsem::aggregate_to_json(agg);
    ok = agg.all_verified;
  } else {
    const upsem::TheoremReport r = upsem::verify_theorem(theorem, caps);
    std::cout << "theorem " << r.id << ": "
              << (r.verified ? "verified" : "COUNTEREXAMPLE") << " ("
              << r.instances << " instances, " << static_cast<long>(r.millis)
              << " ms)\n";
    report_json = upsem::report_to_json(r);
    ok = r.verified;
  }
  if (!report_path.empty())
    write_or_print(report_path, report_json.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_hasse(const std::string& carrier, const std::string& space,
              const std::string& format) {
  const upsem::CayleyTable t = upsem::load_carrier(carrier);
  const upsem::SpaceKind kind = upsem::parse_space(space);
  const upsem::ExtensionSemigroup e =
      upsem::build_extension(t, kind, upsem::Caps::defaults());
  const upsem::HasseDiagram d = upsem::hasse_diagram(e);
  if (format == "dot")
    std::cout << upsem::to_dot(d);
  else if (format == "json")
    std::cout << upsem::hasse_to_json(d).dump(2) << "\n";
  else
    throw upsem::input_error("format must be dot or json");
  return 0;
}

int cmd_catalog() {
  std::cout << "named carriers:\n";
  for (const std::string& line : upsem::carrier_catalog())
    std::cout << "  " << line << "\n";
  std::cout << "\nnamed elements of lambda over chain:4:\n";
  for (const auto& [name, f] : upsem::named_lambda4_elements())
    std::cout << "  " << name << " = " << upsem::family_to_json(f).dump()
              << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for extension semigroups of finite semigroups"};
  app.require_subcommand(1);

  std::string carrier, space, property, format = "dot", theorem = "all";
  std::string out_path, analysis_out, table_out, a_path, b_path, report_path;
  bool count_only = false;
  int max_order = 0;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list a space's upfamilies");
  enumerate->add_option("--carrier", carrier)->required();
  enumerate->add_option("--space", space)->required();
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--out", out_path);

  CLI::App* check = app.add_subcommand("check", "check a property of an extension");
  check->add_option("--carrier", carrier)->required();
  check->add_option("--space", space)->required();
  check->add_option("--property", property)->required();
  check->add_option("--analysis-out", analysis_out);
  check->add_option("--table-out", table_out);

  CLI::App* product = app.add_subcommand("product", "multiply two upfamilies");
  product->add_option("--carrier", carrier)->required();
  product->add_option("--a", a_path)->required();
  product->add_option("--b", b_path)->required();

  CLI::App* verify = app.add_subcommand("verify", "verify the theorem catalog");
  verify->add_option("--theorem", theorem);
  verify->add_option("--max-order", max_order);
  verify->add_option("--report", report_path);

  CLI::App* hasse = app.add_subcommand("hasse", "emit the idempotent order");
  hasse->add_option("--carrier", carrier)->required();
  hasse->add_option("--space", space)->required();
  hasse->add_option("--format", format);

  CLI::App* catalog = app.add_subcommand("catalog", "list named carriers and families");

  try {
    app.parse(argc, argv);
    if (enumerate->parsed())
      return cmd_enumerate(carrier, space, count_only, out_path);
    if (check->parsed())
      return cmd_check(carrier, space, property, analysis_out, table_out);
    if (product->parsed()) return cmd_product(carrier, a_path, b_path);
    if (verify->parsed()) return cmd_verify(theorem, max_order, report_path);
    if (hasse->parsed()) return cmd_hasse(carrier, space, format);
    if (catalog->parsed()) return cmd_catalog();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const upsem::not_semilattice_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const upsem::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const upsem::cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const upsem::internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
