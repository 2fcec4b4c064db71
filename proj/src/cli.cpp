#include "tcc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tcc/claims.hpp"
#include "tcc/morphisms.hpp"
#include "tcc/perm.hpp"
#include "tcc/twisted.hpp"

namespace tcc {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 20240607;
  int bound = 5;
  bool timing = false;
};

struct TwistSpec {
  std::string group;
  std::string inner;
  std::string map;
};

Json labels_json(const FiniteGroup& g, const Subset& s) { return Json(sorted_labels(g, s)); }

GroupMap resolve_twist(const FiniteGroup& g, const TwistSpec& spec, Json& inputs) {
  if (!spec.inner.empty() && !spec.map.empty()) throw UsageError("give either --inner or --map, not both");
  if (!spec.inner.empty()) {
    inputs["inner"] = spec.inner;
    return inner_automorphism(g, parse_element(g, spec.inner));
  }
  if (!spec.map.empty()) {
    inputs["map"] = spec.map;
    return parse_map(g, spec.map);
  }
  throw UsageError("a twist is required: --inner <element> or --map \"x->...,y->...\"");
}

Json subgroup_json(const FiniteGroup& g, const Subset& s) {
  Json j;
  SubgroupTest t = is_subgroup(g, s);
  j["subgroup"] = t.is_subgroup;
  if (t.inverse_witness) j["witness"] = {{"element", g.label(*t.inverse_witness)}, {"missing_inverse", g.label(g.inv(*t.inverse_witness))}};
  if (t.product_witness) {
    auto [a, b] = *t.product_witness;
    j["witness"] = {{"left", g.label(a)}, {"right", g.label(b)}, {"product", g.label(g.mul(a, b))}};
  }
  if (t.is_subgroup) {
    j["normal"] = is_normal(g, s);
    j["index"] = g.order() / s.size();
  }
  return j;
}

Json cmd_group(const std::string& name, Json& inputs) {
  inputs["group"] = name;
  FiniteGroup g = catalog(name);
  Json r;
  r["name"] = g.name();
  r["order"] = g.order();
  r["abelian"] = g.is_abelian();
  r["center"] = labels_json(g, center(g));
  r["derived_subgroup"] = labels_json(g, derived_subgroup(g));
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  r["class_sizes"] = sizes;
  Nilpotency n = is_nilpotent(g);
  r["nilpotent"] = n.nilpotent;
  if (n.nilpotent) r["nilpotency_class"] = n.nilpotency_class;
  r["simple"] = is_simple(g);
  r["generators"] = std::vector<std::string>(g.generator_names().begin(), g.generator_names().end());
  return r;
}

Json cmd_twisted_class(const TwistSpec& spec, const std::string& element, Json& inputs) {
  inputs["group"] = spec.group;
  FiniteGroup g = catalog(spec.group);
  GroupMap phi = resolve_twist(g, spec, inputs);
  inputs["element"] = element;
  Element x = parse_element(g, element);
  TwistedClass c = twisted_class(g, phi, x);
  Json r;
  r["map"] = map_to_string(g, phi);
  r["automorphism"] = phi.is_automorphism();
  r["class"] = labels_json(g, c.members);
  r["size"] = c.members.size();
  Json sub = subgroup_json(g, c.members);
  for (auto& [k, v] : sub.items()) r[k] = v;
  return r;
}

Json cmd_reidemeister(const TwistSpec& spec, Json& inputs) {
  inputs["group"] = spec.group;
  FiniteGroup g = catalog(spec.group);
  GroupMap phi = resolve_twist(g, spec, inputs);
  TwistedPartition p = twisted_partition(g, phi);
  Json r;
  r["map"] = map_to_string(g, phi);
  r["reidemeister"] = p.reidemeister();
  Json classes = Json::array();
  for (const auto& c : p.classes) classes.push_back(labels_json(g, c.members));
  r["classes"] = classes;
  return r;
}

Json scan_one(const FiniteGroup& g) {
  InnerScan s = scan_all_inner(g);
  Json r;
  r["group"] = g.name();
  r["order"] = g.order();
  r["all_inner_unit_classes_subgroups"] = s.all_subgroups;
  std::vector<std::string> failures;
  for (Element h : s.failures) failures.push_back(g.label(h));
  r["failing_representatives"] = failures;
  r["nilpotent"] = s.nilpotency.nilpotent;
  if (s.nilpotency.nilpotent) r["nilpotency_class"] = s.nilpotency.nilpotency_class;
  r["consistent"] = s.nilpotency_consistent;
  r["quotients_inherit"] = std::string(to_string(prop5_check(g)));
  r["maximal_normal_quotients_prime_cyclic"] = std::string(to_string(prop6_check(g)));
  r["derived_in_center"] = std::string(to_string(prop8_check(g)));
  return r;
}

Json cmd_scan(const std::string& name, bool all, Json& inputs) {
  if (all == !name.empty()) throw UsageError("scan needs exactly one of --group or --all");
  if (!all) {
    inputs["group"] = name;
    return scan_one(catalog(name));
  }
  inputs["all"] = true;
  Json rows = Json::array();
  for (const auto& n : catalog_sweep_names()) rows.push_back(scan_one(catalog(n)));
  return Json{{"groups", rows}};
}

Json cmd_series(const std::string& name, const std::string& start, Json& inputs) {
  inputs["group"] = name;
  FiniteGroup g = catalog(name);
  Chooser chooser = smallest_element_chooser();
  if (!start.empty()) {
    inputs["start"] = start;
    chooser = starting_with(parse_element(g, start));
  }
  SeriesReport s = theorem2_series(g, chooser);
  Json r;
  Json chain = Json::array();
  for (const auto& c : s.chain) chain.push_back(labels_json(g, c));
  r["chain"] = chain;
  std::vector<std::string> trace;
  for (Element h : s.trace) trace.push_back(g.label(h));
  r["trace"] = trace;
  r["terminal"] = std::string(to_string(s.terminal));
  if (s.failed_step) {
    r["failed_step"] = *s.failed_step;
    r["failed_class"] = labels_json(g, inner_unit_class(g, s.trace.back()));
  }
  if (s.central_element) {
    r["central_element"] = g.label(*s.central_element);
    r["central_certified"] = s.central_certified;
  }
  r["strictly_descending"] = s.strictly_descending;
  r["all_normal"] = s.all_normal;
  return r;
}

Json cmd_endo_table(const std::string& name, Json& inputs) {
  inputs["group"] = name;
  FiniteGroup g = catalog(name);
  auto endos = enumerate_homomorphisms(g);
  std::vector<GroupMap> auts;
  for (const auto& m : endos)
    if (m.is_automorphism()) auts.push_back(m);
  auto census = endo_orbit_census(endos, auts);
  std::vector<std::size_t> orbit_of(endos.size());
  for (std::size_t o = 0; o < census.size(); ++o)
    for (std::size_t i : census[o].members) orbit_of[i] = o;
  Json rows = Json::array();
  for (std::size_t i = 0; i < endos.size(); ++i) {
    const auto& phi = endos[i];
    Subset e = unit_class(g, phi);
    Json row;
    row["index"] = i;
    row["map"] = map_to_string(g, phi);
    row["kind"] = phi.is_automorphism() ? "automorphism" : "endomorphism";
    row["orbit"] = orbit_of[i];
    row["unit_class"] = labels_json(g, e);
    row["unit_class_subgroup"] = bool(is_subgroup(g, e));
    row["reidemeister"] = twisted_partition(g, phi).reidemeister();
    rows.push_back(row);
  }
  Json orbits = Json::array();
  for (std::size_t o = 0; o < census.size(); ++o)
    orbits.push_back({{"orbit", o}, {"size", census[o].size()}, {"automorphisms", census[o].automorphisms},
                      {"members", census[o].members}});
  return Json{{"endomorphisms", endos.size()}, {"automorphisms", auts.size()}, {"table", rows}, {"orbits", orbits}};
}

Json claims_json(const ClaimReport& report) {
  Json list = Json::array();
  for (const auto& c : report.claims)
    list.push_back({{"tag", c.tag}, {"anchor", c.anchor}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return list;
}

// Text rendering --------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    bool flat = std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + scalar_text(v[i]);
      return out + "}";
    }
  }
  return v.dump();
}

void render_text(std::ostream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& val = it.value();
    if (val.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(out, val, indent + 2);
    } else if (val.is_array() && std::any_of(val.begin(), val.end(), [](const Json& e) { return e.is_structured(); })) {
      out << pad << it.key() << ":\n";
      for (const auto& item : val) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render_text(out, item, indent + 4);
        } else {
          out << pad << "  - " << scalar_text(item) << "\n";
        }
      }
    } else {
      out << pad << it.key() << ": " << scalar_text(val) << "\n";
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(prefix, scalar_text(v));
  }
}

void render(std::ostream& out, const std::string& format, const Json& doc, const ClaimReport* claims) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (claims) {
      out << "tag,anchor,expected,actual,pass\n";
      for (const auto& c : claims->claims)
        out << csv_field(c.tag) << ',' << csv_field(c.anchor) << ',' << csv_field(c.expected) << ','
            << csv_field(c.actual) << ',' << (c.pass ? "pass" : "fail") << "\n";
      return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc["result"], "", rows);
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << "\n";
    return;
  }
  out << "command: " << doc["command"].get<std::string>() << "\n";
  if (!doc["inputs"].empty()) {
    out << "inputs:\n";
    render_text(out, doc["inputs"], 2);
  }
  if (claims) {
    std::string tag;
    for (const auto& c : claims->claims) {
      if (c.tag != tag) {
        tag = c.tag;
        out << "[" << tag << "]\n";
      }
      out << (c.pass ? "  PASS " : "  FAIL ") << c.anchor << ": " << c.actual;
      if (!c.pass) out << " (expected " << c.expected << ")";
      out << "\n";
    }
    if (!claims->findings.empty()) {
      out << "findings:\n";
      for (const auto& f : claims->findings) out << "  " << f << "\n";
    }
    std::size_t passed = std::count_if(claims->claims.begin(), claims->claims.end(), [](const Claim& c) { return c.pass; });
    out << "summary: " << passed << "/" << claims->claims.size() << " claims pass\n";
  } else {
    out << "result:\n";
    render_text(out, doc["result"], 2);
  }
  if (doc.contains("elapsed_ms")) out << "elapsed_ms: " << doc["elapsed_ms"].dump() << "\n";
}

std::set<std::string> split_tags(const std::string& s) {
  std::set<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted classes of the identity and their subgroup tests"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", gl.seed, "Seed for randomized sweeps");
  app.add_option("--bound", gl.bound, "Search box half-width for the nilpotent and wreath searches")
      ->check(CLI::Range(1, 12));
  app.add_flag("--timing", gl.timing, "Report elapsed time");

  std::string group_name;
  auto* group = app.add_subcommand("group", "Order, center, derived subgroup, classes, nilpotency");
  group->add_option("name", group_name, "Catalog name, e.g. S3, prop14, C2xQ8")->required();

  TwistSpec tspec;
  std::string element = "e";
  auto* tclass = app.add_subcommand("twisted-class", "Twisted class of an element and its subgroup verdict");
  tclass->add_option("--group", tspec.group)->required();
  tclass->add_option("--inner", tspec.inner, "Inner twist x -> h^-1 x h by this element");
  tclass->add_option("--map", tspec.map, "Endomorphism as generator images, \"x->y, y->x\"");
  tclass->add_option("--element", element, "Class representative (default e)");

  TwistSpec rspec;
  auto* reid = app.add_subcommand("reidemeister", "Partition into twisted classes");
  reid->add_option("--group", rspec.group)->required();
  reid->add_option("--inner", rspec.inner);
  reid->add_option("--map", rspec.map);

  std::string scan_group;
  bool scan_all = false;
  auto* scan = app.add_subcommand("scan", "Check [e]_h over all inner twists");
  scan->add_option("--group", scan_group);
  scan->add_flag("--all", scan_all, "Every catalog group of order <= 60");

  std::string series_group, series_start;
  auto* series = app.add_subcommand("series", "Descending chain G > [e]_h0 > [e]_h1 > ...");
  series->add_option("--group", series_group)->required();
  series->add_option("--start", series_start, "First chosen element (default: smallest)");

  std::string endo_group;
  auto* endo = app.add_subcommand("endo-table", "All endomorphisms with orbits under Aut");
  endo->add_option("--group", endo_group)->required();

  std::string only;
  auto* verify = app.add_subcommand("verify-paper", "Run every claim check");
  verify->add_option("--only", only, "Comma-separated tags: s3,a4,simple,order8,free-nil2,free-nil3,wreath,invariants");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Json doc;
  Json inputs = Json::object();
  Json result;
  ClaimReport claims;
  bool is_verify = false;
  std::string command;
  try {
    if (*group) {
      command = "group";
      result = cmd_group(group_name, inputs);
    } else if (*tclass) {
      command = "twisted-class";
      result = cmd_twisted_class(tspec, element, inputs);
    } else if (*reid) {
      command = "reidemeister";
      result = cmd_reidemeister(rspec, inputs);
    } else if (*scan) {
      command = "scan";
      result = cmd_scan(scan_group, scan_all, inputs);
    } else if (*series) {
      command = "series";
      result = cmd_series(series_group, series_start, inputs);
    } else if (*endo) {
      command = "endo-table";
      result = cmd_endo_table(endo_group, inputs);
    } else if (*verify) {
      command = "verify-paper";
      is_verify = true;
      ClaimOptions options;
      options.seed = gl.seed;
      options.bound = gl.bound;
      options.only = split_tags(only);
      inputs["seed"] = gl.seed;
      inputs["bound"] = gl.bound;
      if (!only.empty()) inputs["only"] = std::vector<std::string>(options.only.begin(), options.only.end());
      claims = run_claims(options);
      std::size_t passed = std::count_if(claims.claims.begin(), claims.claims.end(), [](const Claim& c) { return c.pass; });
      result = {{"claims", claims.claims.size()}, {"passed", passed}, {"findings", claims.findings}};
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["result"] = result;
  doc["claims"] = claims_json(claims);
  if (gl.timing)
    doc["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  render(out, gl.format, doc, is_verify ? &claims : nullptr);
  if (is_verify && !claims.all_pass()) return kExitVerificationFailure;
  return kExitOk;
}

}  // namespace tcc
