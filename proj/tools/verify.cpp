#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "cli.hpp"
#include "fanoline/catalog.hpp"

namespace fanoline::cli {

std::size_t VerifySummary::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

class Recorder {
 public:
  Recorder(VerifySummary& s, std::string entry) : summary_(s), entry_(std::move(entry)) {}

  void seed(std::uint64_t s) { seed_ = s; }
  void operator()(const std::string& check, bool passed, std::string detail = {}) {
    summary_.checks.push_back(CheckResult{entry_, seed_, check, passed, std::move(detail)});
  }

 private:
  VerifySummary& summary_;
  std::string entry_;
  std::uint64_t seed_ = 0;
};

std::string describe(const Integer& expected, const Integer& got) {
  return "expected " + expected.get_str() + ", got " + got.get_str();
}

std::string describe(int expected, int got) { return "expected " + std::to_string(expected) + ", got " + std::to_string(got); }

std::vector<Ideal> component_ideals(const CatalogEntry& e, const NormalizedChart& chart, const ProjectivePoint& p) {
  std::vector<Ideal> out;
  if (!e.component_spans) return out;
  for (const auto& span : e.component_spans(p)) out.push_back(component_ideal_in_chart(chart, span));
  return out;
}

void check_entry_at(const CatalogEntry& e, const ProjectivePoint& p, Recorder& rec, std::optional<bool>& all_empty,
                    std::set<std::pair<int, std::string>>& shapes) {
  NormalizedChart chart = normalize_chart(e.scheme, p);
  ChartAnalysis a = analyze_chart(chart);
  const ExpectedLines& ex = e.expected;
  all_empty = all_empty.value_or(true) && a.lines.is_empty;
  shapes.insert({a.lines.proj_dimension, a.lines.degree.get_str()});

  rec("empty", a.lines.is_empty == ex.empty, a.lines.is_empty ? "L is empty" : "L is nonempty");
  rec("L_subset_B", a.inclusion.contained);
  if (ex.quadratic) {
    rec("J_equals_I_star", scheme_equal(a.lines.J, a.cone.I_star));
    rec("L_equals_B", a.inclusion.equal_as_schemes);
    rec("r_le_c", a.sff.r <= chart.c, "r = " + std::to_string(a.sff.r) + ", c = " + std::to_string(chart.c));
  }
  if (ex.empty) return;
  rec("dim", a.lines.proj_dimension == ex.dim, describe(ex.dim, a.lines.proj_dimension));
  rec("degree", a.lines.degree == ex.degree, describe(ex.degree, a.lines.degree));
  rec("degenerate", a.lines.is_degenerate == ex.degenerate);
  if (ex.saturation_gap) {
    rec("saturation_gap", a.cone.saturation_gap == *ex.saturation_gap);
    rec("linear_form_only_in_saturation",
        a.cone.linear_form_in_saturation && !a.cone.linear_form_in_I_star);
  }
  if (ex.model)
    rec("hilbert_polynomial", a.lines.hilbert_polynomial == hilbert_data(*ex.model).hilbert_polynomial,
        to_string(a.lines.hilbert_polynomial));
  std::vector<Ideal> comps = component_ideals(e, chart, p);
  if (!comps.empty()) {
    std::vector<int> dims;
    for (const auto& c : comps) dims.push_back(hilbert_data(c).proj_dimension);
    rec("components", scheme_equal(ideal_intersect(comps), a.lines.J_saturated) && dims == ex.component_dims);
    int total = 0;
    for (int d : dims) total += d;
    ExtensionReport rep = criterion_report(ExtensionContext{e.scheme, {}, {}, p}, comps);
    Conclusion want = total >= 1 ? Conclusion::kConeForced : Conclusion::kNoVerdict;
    rec("criterion", rep.conclusion == want, to_string(rep.conclusion));
  }
  SmoothnessVerdict smooth = line_scheme_smooth(a.lines, comps);
  rec("smooth", smooth.is_smooth(), to_string(smooth.value));
}

void check_cone_at(const CatalogEntry& e, const ProjectivePoint& y, Recorder& rec) {
  ExtensionContext ctx = cone_context(e.scheme, y);
  NormalizedChart chart = normalize_chart(e.scheme, y);
  std::vector<Ideal> comps = component_ideals(e, chart, y);
  ExtensionReport rep = criterion_report(ctx, comps, {cone_vertex(e.scheme)});
  rec("hyperplane_section", rep.hyperplane_section_ok.value_or(false));
  rec("line_restriction", rep.line_restriction_ok.value_or(false));
  bool on_lines = false;
  if (rep.singular_line_directions.size() == 1) {
    ExtensionCharts charts = extension_charts(ctx);
    Ideal JX = saturate_irrelevant(line_scheme_ideal(charts.X));
    on_lines = std::all_of(JX.generators().begin(), JX.generators().end(),
                           [&](const Polynomial& g) { return g.evaluate(rep.singular_line_directions[0]) == 0; });
  }
  rec("vertex_direction", on_lines, std::to_string(rep.singular_line_directions.size()) + " direction(s)");
  rec("conclusion", rep.conclusion == Conclusion::kIsAConeVerified, to_string(rep.conclusion));
  for (const auto& c : rep.components)
    rec("dimension_jump", c.extended_dim == c.dim + 1 && c.extended_in_lines.value_or(false));
}

}  // namespace

VerifySummary verify_all(const std::vector<std::string>& entries, std::uint64_t seeds, bool cones) {
  VerifySummary summary;
  const std::vector<std::string> names = entries.empty() ? catalog_names() : entries;
  for (const auto& name : names) {
    Recorder rec(summary, name);
    std::optional<CatalogEntry> e;
    try {
      e = catalog_entry(name);
    } catch (const std::exception& ex) {
      rec("construct", false, ex.what());
      continue;
    }
    rec("parametrization", parametrization_is_valid(*e));
    std::optional<bool> all_empty;
    std::set<std::pair<int, std::string>> shapes;
    for (std::uint64_t s = 1; s <= seeds; ++s) {
      rec.seed(s);
      try {
        check_entry_at(*e, rational_point(*e, s), rec, all_empty, shapes);
      } catch (const std::exception& ex) {
        rec("pipeline", false, ex.what());
      }
    }
    std::string note;
    if (all_empty.value_or(false)) {
      note = "L empty at all seeds";
    } else if (shapes.size() == 1) {
      note = "dim " + std::to_string(shapes.begin()->first) + ", degree " + shapes.begin()->second + " at all seeds";
    } else {
      note = "L varies across seeds";
    }
    summary.entry_notes.emplace_back(name, note);
  }
  if (cones) {
    static const std::vector<std::string> kConeBases{"segre_1_2", "segre_2_2", "veronese2_2", "quadric_2"};
    for (const auto& base : kConeBases) {
      if (!entries.empty() && std::find(entries.begin(), entries.end(), base) == entries.end()) continue;
      Recorder rec(summary, "cone_" + base);
      CatalogEntry e = catalog_entry(base);
      for (std::uint64_t s = 1; s <= seeds; ++s) {
        rec.seed(s);
        try {
          check_cone_at(e, rational_point(e, s), rec);
        } catch (const std::exception& ex) {
          rec("pipeline", false, ex.what());
        }
      }
      summary.entry_notes.emplace_back("cone_" + base, "cone laws checked at all seeds");
    }
  }
  return summary;
}

}  // namespace fanoline::cli
