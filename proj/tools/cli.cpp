#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fanoline/catalog.hpp"
#include "fanoline/errors.hpp"

namespace fanoline::cli {

using nlohmann::json;

namespace {

json strings(std::span<const Polynomial> polys) { return to_strings(polys); }

json basis_strings(const Ideal& I) { return strings(I.groebner_basis()); }

json smooth_value(const SmoothnessVerdict& v) {
  if (v.value == Smoothness::kUndetermined) return "undetermined";
  return v.is_smooth();
}

json vector_strings(const RationalVector& v) { return to_string(ProjectivePoint(v)); }

Polynomial parse_in(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

PresentedScheme scheme_from_json(const json& j) {
  if (j.contains("entry")) return catalog_entry(j.at("entry").get<std::string>()).scheme;
  if (j.contains("file")) return read_scheme_file(j.at("file").get<std::string>());
  std::optional<int> dim;
  if (j.contains("dim")) dim = j.at("dim").get<int>();
  return PresentedScheme::from_strings(j.at("ambient").get<std::size_t>(), j.at("generators").get<std::vector<std::string>>(),
                                       dim);
}

}  // namespace

json line_report_json(const ChartAnalysis& a, const ProjectivePoint& x) {
  const LineSchemeReport& l = a.lines;
  json j;
  j["point"] = to_string(x);
  j["J"] = strings(l.J.generators());
  j["J_saturated"] = basis_strings(l.J_saturated);
  j["dim"] = l.proj_dimension;
  j["degree"] = l.degree.get_si();
  j["empty"] = l.is_empty;
  j["smooth"] = smooth_value(l.smooth);
  j["degenerate"] = l.is_degenerate;
  j["hilbert_polynomial"] = to_string(l.hilbert_polynomial, "s");
  j["I_star"] = strings(a.cone.I_star.generators());
  j["saturation_gap"] = a.cone.saturation_gap;
  j["II"] = {{"r", a.sff.r}, {"quadrics", basis_strings(a.sff.base_locus)}};
  j["L_subset_B"] = a.inclusion.contained;
  j["L_equals_B"] = a.inclusion.equal_as_schemes;
  j["quadratic_presentation"] = a.quadratic;
  j["notes"] = l.notes;
  if (!l.smooth.note.empty()) j["notes"].push_back(l.smooth.note);
  return j;
}

json tangent_cone_json(const TangentConeResult& t) {
  return {{"I", strings(t.I.generators())},
          {"I_star", strings(t.I_star.generators())},
          {"I_star_saturated", basis_strings(t.I_star_saturated)},
          {"saturation_gap", t.saturation_gap},
          {"I_star_in_J", t.I_star_in_J},
          {"linear_form_in_I_star", t.linear_form_in_I_star},
          {"linear_form_in_saturation", t.linear_form_in_saturation}};
}

json second_form_json(const SecondFundamentalForm& sff, const LinesInBase& inclusion) {
  HilbertData b = hilbert_data(sff.base_locus);
  return {{"r", sff.r},
          {"quadrics", basis_strings(sff.base_locus)},
          {"base_locus", {{"dim", b.proj_dimension}, {"degree", b.degree.get_si()}}},
          {"L_subset_B", inclusion.contained},
          {"L_equals_B", inclusion.equal_as_schemes}};
}

json extension_report_json(const ExtensionReport& r) {
  json j;
  j["hyperplane_section_ok"] = r.hyperplane_section_ok ? json(*r.hyperplane_section_ok) : json(nullptr);
  j["line_restriction_ok"] = r.line_restriction_ok ? json(*r.line_restriction_ok) : json(nullptr);
  j["decomposition_verified"] = r.decomposition_verified;
  j["n"] = r.n;
  j["components"] = json::array();
  for (const auto& c : r.components) {
    json cj{{"ideal", basis_strings(c.ideal)}, {"dim", c.dim}};
    cj["extended_dim"] = c.extended_dim ? json(*c.extended_dim) : json(nullptr);
    cj["extended_in_lines"] = c.extended_in_lines ? json(*c.extended_in_lines) : json(nullptr);
    j["components"].push_back(cj);
  }
  j["base_inequality"] = r.base_inequality;
  j["extended_inequality"] = r.extended_inequality;
  j["criterion_fires"] = r.criterion_fires;
  j["singular_line_directions"] = json::array();
  for (const auto& d : r.singular_line_directions) j["singular_line_directions"].push_back(vector_strings(d));
  j["is_cone"] = r.is_cone;
  j["vertex_direction_found"] = r.vertex_direction_found;
  j["conclusion"] = to_string(r.conclusion);
  j["notes"] = r.notes;
  return j;
}

json verify_json(const VerifySummary& s) {
  json j;
  j["checks"] = json::array();
  for (const auto& c : s.checks)
    j["checks"].push_back({{"entry", c.entry}, {"seed", c.seed}, {"check", c.check}, {"passed", c.passed}, {"detail", c.detail}});
  j["entries"] = json::object();
  for (const auto& [name, note] : s.entry_notes) {
    bool ok = true;
    for (const auto& c : s.checks)
      if (c.entry == name && !c.passed) ok = false;
    j["entries"][name] = {{"passed", ok}, {"note", note}};
  }
  j["total"] = s.checks.size();
  j["failures"] = s.failures();
  j["passed"] = s.failures() == 0;
  return j;
}

Scenario parse_scenario(const json& doc) {
  try {
    PresentedScheme Y = scheme_from_json(doc.at("Y"));
    std::optional<CatalogEntry> entry;
    if (doc.at("Y").contains("entry")) entry = catalog_entry(doc.at("Y").at("entry").get<std::string>());
    ProjectivePoint y = doc.contains("y") ? parse_point(doc.at("y").get<std::string>(), Y.ambient_dim())
                        : entry       ? rational_point(*entry, doc.value("seed", std::uint64_t{1}))
                                      : throw InputError("scenario needs a point y or a catalog Y with a seed");
    Scenario s{ExtensionContext{Y, std::nullopt, std::nullopt, y}, {}, {}};
    if (doc.value("cone", false)) {
      s.context = cone_context(Y, y);
      s.singular_points.push_back(cone_vertex(Y));
    } else if (doc.contains("X")) {
      PresentedScheme X = scheme_from_json(doc.at("X"));
      if (!doc.contains("H")) throw InputError("scenario with X needs a hyperplane H");
      s.context.X = X;
      s.context.H = parse_in(doc.at("H").get<std::string>(), X.ring());
    }
    if (doc.contains("singular_points")) {
      if (!s.context.X) throw InputError("singular points need an extension X");
      for (const auto& p : doc.at("singular_points"))
        s.singular_points.push_back(parse_point(p.get<std::string>(), s.context.X->ambient_dim()));
    }
    if (doc.contains("decomposition")) {
      NormalizedChart chart = normalize_chart(Y, y);
      const json& d = doc.at("decomposition");
      if (d.is_string() && d.get<std::string>() == "catalog") {
        if (!entry || !entry->component_spans) throw InputError("no catalog decomposition for this Y");
        for (const auto& span : entry->component_spans(y)) s.decomposition.push_back(component_ideal_in_chart(chart, span));
      } else {
        for (const auto& gens : d) {
          std::vector<Polynomial> polys;
          for (const auto& g : gens) polys.push_back(parse_in(g.get<std::string>(), chart.tangent_ring));
          s.decomposition.emplace_back(chart.tangent_ring, std::move(polys));
        }
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed scenario: ") + e.what());
  }
}

std::string render_text(const json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (value.is_array()) {
      out << key << ":";
      if (value.empty()) out << " (none)";
      out << "\n";
      for (const auto& v : value) out << "  " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [k, v] : value.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return out.str();
}

namespace {

struct Options {
  std::string scheme_file;
  std::string entry;
  std::string point;
  std::uint64_t seed = 1;
  std::uint64_t seeds = 3;
  bool as_json = false;
  std::string out_file;
  std::string scenario;
  bool no_cones = false;
  std::vector<std::string> positional;
};

PresentedScheme load_scheme(const Options& o) {
  if (!o.scheme_file.empty() && !o.entry.empty()) throw InputError("give either --scheme or --entry, not both");
  if (!o.scheme_file.empty()) return read_scheme_file(o.scheme_file);
  if (!o.entry.empty()) return catalog_entry(o.entry).scheme;
  throw InputError("a scheme is required (--scheme FILE or --entry NAME)");
}

ProjectivePoint load_point(const Options& o, const PresentedScheme& X) {
  if (!o.point.empty()) {
    ProjectivePoint p = parse_point(o.point, X.ambient_dim());
    if (!lies_on(X, p)) throw PointNotOnScheme();
    return p;
  }
  if (!o.entry.empty()) return rational_point(catalog_entry(o.entry), o.seed);
  throw InputError("a point is required (--point STR, or --entry NAME with --seed)");
}

NormalizedChart load_chart(const Options& o) {
  PresentedScheme X = load_scheme(o);
  ProjectivePoint p = load_point(o, X);
  return normalize_chart(X, p);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw InputError("cannot write " + o.out_file);
  f << text;
}

void emit_report(const Options& o, const json& report, std::ostream& out) {
  emit(o, o.as_json ? report.dump(2) + "\n" : render_text(report), out);
}

int cmd_lines(const Options& o, std::ostream& out) {
  NormalizedChart chart = load_chart(o);
  emit_report(o, line_report_json(analyze_chart(chart), chart.point), out);
  return kOk;
}

int cmd_tangent_cone(const Options& o, std::ostream& out) {
  NormalizedChart chart = load_chart(o);
  emit_report(o, tangent_cone_json(tangent_cone(chart)), out);
  return kOk;
}

int cmd_second_form(const Options& o, std::ostream& out) {
  NormalizedChart chart = load_chart(o);
  SecondFundamentalForm sff = second_fundamental_form(chart);
  emit_report(o, second_form_json(sff, verify_L_in_B(line_scheme(chart), sff)), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> entries;
  if (!o.entry.empty()) entries.push_back(o.entry);
  VerifySummary s = verify_all(entries, o.seeds, !o.no_cones);
  if (o.as_json) {
    emit(o, verify_json(s).dump(2) + "\n", out);
  } else {
    std::ostringstream text;
    for (const auto& c : s.checks)
      if (!c.passed)
        text << "FAIL " << c.entry << " seed " << c.seed << " " << c.check << (c.detail.empty() ? "" : ": " + c.detail)
             << "\n";
    json j = verify_json(s);
    for (const auto& [name, note] : s.entry_notes)
      text << (j["entries"][name]["passed"].get<bool>() ? "PASS " : "FAIL ") << name << ": " << note << "\n";
    text << (s.checks.size() - s.failures()) << "/" << s.checks.size() << " checks passed\n";
    emit(o, text.str(), out);
  }
  return s.failures() == 0 ? kOk : kCheckFailed;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const auto& pos = o.positional;
  if (pos.empty()) throw InputError("catalog needs an action: list or emit NAME");
  if (pos[0] == "list") {
    std::ostringstream text;
    json list = json::array();
    for (const auto& name : catalog_names()) {
      CatalogEntry e = catalog_entry(name);
      list.push_back({{"name", name}, {"description", e.description}, {"ambient", e.scheme.ambient_dim()},
                      {"dim", e.scheme.dimension()}});
      text << name << "  " << e.description << "\n";
    }
    emit(o, o.as_json ? list.dump(2) + "\n" : text.str(), out);
    return kOk;
  }
  if (pos[0] == "emit") {
    if (pos.size() != 2) throw InputError("catalog emit needs exactly one NAME");
    CatalogEntry e = catalog_entry(pos[1]);
    std::string text = "# " + e.name + ": " + e.description + "\n" + format_scheme(e.scheme);
    if (o.point.empty() && !e.known_points.empty() && e.parametrization.empty())
      text += "# known point: " + to_string(rational_point(e, o.seed)) + "\n";
    emit(o, text, out);
    return kOk;
  }
  throw InputError("unknown catalog action '" + pos[0] + "'");
}

int cmd_cone(const Options& o, std::ostream& out) {
  emit(o, format_scheme(cone(load_scheme(o))), out);
  return kOk;
}

int cmd_extension_report(const Options& o, std::ostream& out) {
  Scenario s = [&] {
    if (!o.scenario.empty()) {
      std::ifstream f(o.scenario);
      if (!f) throw InputError("cannot read " + o.scenario);
      json doc;
      try {
        doc = json::parse(f);
      } catch (const json::exception& e) {
        throw InputError(std::string("malformed scenario: ") + e.what());
      }
      return parse_scenario(doc);
    }
    if (o.entry.empty()) throw InputError("extension-report needs --scenario FILE or --entry NAME");
    json doc{{"Y", {{"entry", o.entry}}}, {"seed", o.seed}, {"cone", o.positional.size() == 1 && o.positional[0] == "cone"}};
    if (catalog_entry(o.entry).component_spans) doc["decomposition"] = "catalog";
    if (!o.point.empty()) doc["y"] = o.point;
    return parse_scenario(doc);
  }();
  emit_report(o, extension_report_json(criterion_report(s.context, s.decomposition, s.singular_points)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lines through a general point of a projective variety", "fanoline"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme_file, "Scheme file");
    sub->add_option("--entry", o.entry, "Catalog entry name");
    sub->add_option("--point", o.point, "Point as comma-separated rationals");
    sub->add_option("--seed", o.seed, "Seed for catalog point sampling");
    sub->add_flag("--json", o.as_json, "JSON output");
    sub->add_option("--out", o.out_file, "Write output to FILE");
  };
  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto verb = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    verbs.emplace_back(sub, h);
    return sub;
  };
  verb("lines", "Line scheme report at a point", cmd_lines);
  verb("tangent-cone", "Tangent cone and initial forms", cmd_tangent_cone);
  verb("second-form", "Second fundamental form and its base locus", cmd_second_form);
  CLI::App* verify = verb("verify", "Check the catalog against its expectations", cmd_verify);
  verify->add_option("--seeds", o.seeds, "Number of seeds per entry");
  verify->add_flag("--no-cones", o.no_cones, "Skip the cone scenarios");
  CLI::App* catalog = verb("catalog", "List catalog entries or emit one as a scheme file", cmd_catalog);
  catalog->add_option("action", o.positional, "list | emit NAME");
  verb("cone", "Emit the cone over a scheme", cmd_cone);
  CLI::App* ext = verb("extension-report", "Extension criterion report", cmd_extension_report);
  ext->add_option("--scenario", o.scenario, "Scenario JSON file");
  ext->add_option("mode", o.positional, "'cone' to use the cone over the entry");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    for (const auto& [sub, handler] : verbs)
      if (sub->parsed()) return handler(o, out);
  } catch (const PointNotOnScheme&) {
    err << "error: point not on scheme\n";
    return kInputError;
  } catch (const SingularPoint&) {
    err << "error: singular point\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace fanoline::cli
