#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fanoline/catalog.hpp"
#include "fanoline/extension.hpp"
#include "fanoline/linescheme.hpp"
#include "fanoline/matrix.hpp"
#include "test_util.hpp"

namespace fanoline {
namespace {

constexpr std::uint64_t kSeeds = 3;

class Criterion {
 public:
  explicit Criterion(std::string* detail) : detail_(detail) {}

  void require(bool ok, const std::string& what) {
    if (!ok && passed_) {
      passed_ = false;
      *detail_ = what;
    }
  }
  bool passed() const { return passed_; }

 private:
  std::string* detail_;
  bool passed_ = true;
};

std::string at(const std::string& name, std::uint64_t seed) { return name + " seed " + std::to_string(seed); }

bool proportional(const RationalVector& a, const RationalVector& b) {
  return a.size() == b.size() && rank(RationalMatrix::from_rows({a, b})) == 1;
}

std::vector<Ideal> components(const CatalogEntry& e, const NormalizedChart& chart, const ProjectivePoint& p) {
  std::vector<Ideal> out;
  for (const auto& span : e.component_spans(p)) out.push_back(component_ideal_in_chart(chart, span));
  return out;
}

void segre_components(Criterion& c) {
  const std::vector<std::pair<std::pair<int, int>, std::vector<int>>> cases{
      {{1, 1}, {0, 0}}, {{1, 2}, {0, 1}}, {{2, 2}, {1, 1}}, {{1, 3}, {0, 2}}};
  for (const auto& [ab, dims] : cases) {
    CatalogEntry e = segre(ab.first, ab.second);
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
      ProjectivePoint p = rational_point(e, s);
      NormalizedChart chart = normalize_chart(e.scheme, p);
      LineSchemeReport L = line_scheme(chart);
      std::vector<Ideal> comps = components(e, chart, p);
      c.require(scheme_equal(ideal_intersect(comps), L.J_saturated), at(e.name, s) + ": components");
      std::vector<int> got;
      for (const auto& comp : comps) got.push_back(hilbert_data(comp).proj_dimension);
      std::sort(got.begin(), got.end());
      c.require(got == dims, at(e.name, s) + ": component dimensions");
    }
  }
}

void veronese_empty(Criterion& c) {
  for (int n : {2, 3}) {
    CatalogEntry e = veronese2(n);
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
      LineSchemeReport L = line_scheme(normalize_chart(e.scheme, rational_point(e, s)));
      c.require(L.J_saturated.is_unit(), at(e.name, s) + ": J_saturated is not (1)");
    }
  }
}

Ideal segre_1_2_model() {
  RingPtr z = Ring::indexed("z", 6);
  std::vector<std::vector<Polynomial>> m(2);
  for (std::size_t j = 0; j < 3; ++j) {
    m[0].push_back(Polynomial::variable(z, j));
    m[1].push_back(Polynomial::variable(z, 3 + j));
  }
  return Ideal(z, minors(m, 2));
}

void grassmannian(Criterion& c) {
  CatalogEntry g3 = plucker(3);
  CatalogEntry g4 = plucker(4);
  const UniPolynomial model = hilbert_data(segre_1_2_model()).hilbert_polynomial;
  for (std::uint64_t s = 1; s <= kSeeds; ++s) {
    NormalizedChart chart3 = normalize_chart(g3.scheme, rational_point(g3, s));
    LineSchemeReport L3 = line_scheme(chart3);
    c.require(chart3.n == 4 && L3.proj_dimension == 2 && L3.degree == 2, at(g3.name, s) + ": not a quadric surface");
    c.require(L3.smooth.is_smooth(), at(g3.name, s) + ": not smooth");
    LineSchemeReport L4 = line_scheme(normalize_chart(g4.scheme, rational_point(g4, s)));
    c.require(L4.proj_dimension == 3 && L4.degree == 3, at(g4.name, s) + ": dimension or degree");
    c.require(L4.hilbert_polynomial == model, at(g4.name, s) + ": Hilbert polynomial " + to_string(L4.hilbert_polynomial, "s"));
  }
}

void quadratic_equalities(Criterion& c) {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    if (!is_quadratic_presentation(e.scheme)) continue;
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
      NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, s));
      ChartAnalysis a = analyze_chart(chart);
      c.require(scheme_equal(a.lines.J, a.cone.I_star), at(name, s) + ": J != I*");
      c.require(scheme_equal(a.lines.J, a.sff.base_locus), at(name, s) + ": J != base locus");
      c.require(a.sff.r <= chart.c && a.sff.base_locus.generators().size() == a.sff.r, at(name, s) + ": r > c");
    }
  }
}

void scroll_gap(Criterion& c) {
  for (const auto& ab : {std::pair{1, 2}, std::pair{2, 2}}) {
    CatalogEntry e = scroll(ab.first, ab.second);
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
      NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, s));
      ChartAnalysis a = analyze_chart(chart);
      c.require(has_linear_form(a.cone.I_star_saturated) && !has_linear_form(a.cone.I_star),
                at(e.name, s) + ": no saturation gap in degree 1");
      c.require(a.lines.proj_dimension == 0 && a.lines.degree == 1, at(e.name, s) + ": L is not a reduced point");
      c.require(a.lines.is_degenerate, at(e.name, s) + ": not degenerate");
    }
  }
}

void strict_containment(Criterion& c) {
  CatalogEntry e = fermat_cubic();
  c.require(!e.known_points.empty(), "no witness found");
  if (e.known_points.empty()) return;
  const ProjectivePoint& w = e.known_points.front();
  c.require(is_smooth_point(e.scheme, w), "witness is not a smooth point");
  NormalizedChart chart = normalize_chart(e.scheme, w);
  ChartAnalysis a = analyze_chart(chart);
  c.require(a.lines.J_saturated.is_unit(), "L is not empty at " + to_string(w));
  c.require(a.inclusion.contained && !a.inclusion.equal_as_schemes, "containment is not strict");
  HilbertData B = hilbert_data(a.sff.base_locus);
  c.require(chart.n == 2 && B.proj_dimension == 0 && B.degree == 2, "B is not two points of P^1");
}

void complete_intersection_count(Criterion& c) {
  CatalogEntry e = catalog_entry("ci_5_2_2");
  for (std::uint64_t s = 1; s <= kSeeds; ++s) {
    ProjectivePoint p = rational_point(e, s);
    c.require(is_smooth_point(e.scheme, p), at(e.name, s) + ": sampled point is singular");
    NormalizedChart chart = normalize_chart(e.scheme, p);
    LineSchemeReport L = line_scheme(chart);
    const int expected_dim = static_cast<int>(chart.n) - 1 - e.scheme.d_invariant();
    c.require(expected_dim == 0 && L.proj_dimension == expected_dim, at(e.name, s) + ": dimension");
    c.require(L.degree == 2 * 2, at(e.name, s) + ": degree " + L.degree.get_str());
  }
}

void extension_laws(Criterion& c) {
  for (const auto& name : {"segre_1_2", "segre_2_2", "veronese2_2", "quadric_2"}) {
    CatalogEntry e = catalog_entry(name);
    const ProjectivePoint vertex = cone_vertex(e.scheme);
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
      ProjectivePoint y = rational_point(e, s);
      ExtensionContext ctx = cone_context(e.scheme, y);
      std::vector<Ideal> comps;
      if (e.component_spans) comps = components(e, normalize_chart(e.scheme, y), y);
      ExtensionReport rep = criterion_report(ctx, comps, {vertex});
      c.require(rep.hyperplane_section_ok.value_or(false), at(name, s) + ": hyperplane section");
      c.require(rep.line_restriction_ok.value_or(false), at(name, s) + ": line restriction");
      c.require(rep.singular_line_directions.size() == 1, at(name, s) + ": expected one direction");
      if (rep.singular_line_directions.size() != 1) continue;
      const RationalVector& d = rep.singular_line_directions.front();
      ExtensionCharts charts = extension_charts(ctx);
      auto expected = charts.X.tangent_coordinates(vertex.coordinates());
      c.require(expected && proportional(*expected, d), at(name, s) + ": direction is not the vertex");
      Ideal JX = saturate_irrelevant(line_scheme_ideal(charts.X));
      c.require(std::all_of(JX.generators().begin(), JX.generators().end(),
                            [&](const Polynomial& g) { return g.evaluate(d) == 0; }),
                at(name, s) + ": direction off V(J_X)");
      c.require(rep.conclusion == Conclusion::kIsAConeVerified, at(name, s) + ": " + to_string(rep.conclusion));
    }
  }
  for (const auto& ab : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}}) {
    CatalogEntry e = segre(ab.first, ab.second);
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
      ProjectivePoint y = rational_point(e, s);
      ExtensionContext ctx{e.scheme, {}, {}, y};
      ExtensionReport rep = criterion_report(ctx, components(e, normalize_chart(e.scheme, y), y));
      c.require(rep.conclusion == Conclusion::kConeForced, at(e.name, s) + ": " + to_string(rep.conclusion));
    }
  }
}

void monomials_of_degree(std::size_t n, unsigned d, std::size_t from, Monomial cur, std::vector<Monomial>& out) {
  if (from + 1 == n) {
    cur.set(from, d);
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    cur.set(from, e);
    monomials_of_degree(n, d - e, from + 1, cur, out);
  }
}

// f homogeneous of degree d lies in a homogeneous ideal iff it is in the span
// of the degree-d multiples of the generators.
bool membership_oracle(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return true;
  const std::size_t n = I.ring()->size();
  const unsigned d = static_cast<unsigned>(f.total_degree());
  std::vector<Monomial> basis;
  monomials_of_degree(n, d, 0, Monomial{}, basis);
  auto coords = [&](const Polynomial& p) {
    RationalVector row(basis.size());
    for (const auto& t : p.terms())
      row[static_cast<std::size_t>(std::find(basis.begin(), basis.end(), t.monomial) - basis.begin())] = t.coefficient;
    return row;
  };
  std::vector<RationalVector> rows;
  for (const auto& g : I.generators()) {
    if (g.total_degree() > static_cast<int>(d)) continue;
    std::vector<Monomial> mult;
    monomials_of_degree(n, d - static_cast<unsigned>(g.total_degree()), 0, Monomial{}, mult);
    for (const auto& m : mult) rows.push_back(coords(g.times(m, 1)));
  }
  if (rows.empty()) return false;
  const std::size_t r = rank(RationalMatrix::from_rows(rows));
  rows.push_back(coords(f));
  return rank(RationalMatrix::from_rows(rows)) == r;
}

void kernel_soundness(Criterion& c) {
  const MonomialOrder lex = MonomialOrder::lex(), grevlex = MonomialOrder::grevlex();
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, 1));
    ChartAnalysis a = analyze_chart(chart);
    const std::vector<Ideal> ideals{e.scheme.ideal(),  a.lines.J, a.lines.J_saturated, a.cone.I_star,
                                    a.cone.I_star_saturated, a.sff.base_locus};
    for (const auto& I : ideals)
      c.require(satisfies_buchberger_criterion(I.groebner_basis(grevlex), grevlex), name + ": nonzero S-pair residual");
    for (const auto& I : {a.lines.J_saturated, a.cone.I_star_saturated})
      c.require(saturate_irrelevant(I).same_ideal(I), name + ": saturation is not idempotent");
    for (const auto& I : {e.scheme.ideal(), a.lines.J}) {
      HilbertData g = hilbert_data(I, grevlex), l = hilbert_data(I, lex);
      c.require(satisfies_buchberger_criterion(I.groebner_basis(lex), lex), name + ": nonzero lex S-pair residual");
      c.require(g.proj_dimension == l.proj_dimension && g.degree == l.degree, name + ": lex and grevlex disagree");
    }
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> nvars(1, 3), ngens(1, 3), deg(1, 4), target(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    RingPtr x = Ring::indexed("x", static_cast<std::size_t>(nvars(rng)));
    std::vector<Polynomial> gens;
    for (int k = ngens(rng); k > 0; --k) gens.push_back(testing::random_polynomial(x, deg(rng), rng, 3));
    Ideal I(x, gens);
    c.require(satisfies_buchberger_criterion(I.groebner_basis(), grevlex), "random ideal: S-pair residual");
    for (int probe = 0; probe < 4; ++probe) {
      const unsigned d = static_cast<unsigned>(target(rng));
      Polynomial f = testing::random_polynomial(x, d, rng, 3);
      if (probe % 2 == 0)
        for (const auto& g : gens)
          if (g.total_degree() <= static_cast<int>(d))
            f = f + g * testing::random_polynomial(x, d - static_cast<unsigned>(g.total_degree()), rng, 2);
      if (probe == 0 && gens.front().total_degree() <= static_cast<int>(d))
        f = gens.front() * testing::random_polynomial(x, d - static_cast<unsigned>(gens.front().total_degree()), rng, 2);
      c.require(ideal_member(f, I) == membership_oracle(f, I), "random ideal: membership disagrees on " + to_string(f));
    }
  }
}

struct Spec {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Criterion&)> run;
};

}  // namespace
}  // namespace fanoline

int main() {
  using namespace fanoline;
  const std::vector<Spec> specs{
      {1, "Segre line schemes are two linear components", 10, segre_components},
      {2, "Veronese line schemes are empty", 10, veronese_empty},
      {3, "Grassmannian line schemes", 60, grassmannian},
      {4, "quadratic presentations: J = I* = second form base locus", 80, quadratic_equalities},
      {5, "scroll saturation gap", 10, scroll_gap},
      {6, "Fermat cubic: L strictly inside B", 5, strict_containment},
      {7, "complete intersection (2,2) dimension count", 30, complete_intersection_count},
      {8, "cone extension laws and criterion", 60, extension_laws},
      {9, "kernel soundness", 120, kernel_soundness},
  };
  int failures = 0;
  for (const auto& spec : specs) {
    std::string detail;
    Criterion c(&detail);
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.run(c);
    } catch (const std::exception& ex) {
      c.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.passed() && secs >= spec.budget_seconds)
      c.require(false, "over budget of " + std::to_string(static_cast<int>(spec.budget_seconds)) + " s");
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", c.passed() ? "PASS" : "FAIL", spec.number, spec.title.c_str(),
                secs, detail.empty() ? "" : " - ", detail.c_str());
    failures += !c.passed();
  }
  return failures == 0 ? 0 : 1;
}
