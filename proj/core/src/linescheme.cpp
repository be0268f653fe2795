#include "fanoline/linescheme.hpp"

#include <algorithm>

#include "fanoline/errors.hpp"
#include "fanoline/matrix.hpp"

namespace fanoline {

namespace {

// Coefficient rows of homogeneous polynomials over a shared monomial list.
struct CoefficientMatrix {
  std::vector<Monomial> monomials;
  RationalMatrix rows;
};

CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& polys) {
  CoefficientMatrix cm;
  for (const auto& p : polys)
    for (const auto& t : p.terms())
      if (std::find(cm.monomials.begin(), cm.monomials.end(), t.monomial) == cm.monomials.end())
        cm.monomials.push_back(t.monomial);
  std::sort(cm.monomials.begin(), cm.monomials.end(),
            [](const Monomial& a, const Monomial& b) { return MonomialOrder::grevlex().greater(a, b); });
  cm.rows = RationalMatrix(polys.size(), cm.monomials.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& t : polys[i].terms()) {
      auto it = std::find(cm.monomials.begin(), cm.monomials.end(), t.monomial);
      cm.rows(i, static_cast<std::size_t>(it - cm.monomials.begin())) = t.coefficient;
    }
  return cm;
}

// Reduced row echelon basis of the span.
std::vector<Polynomial> span_basis(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  std::vector<Polynomial> nonzero;
  for (const auto& p : polys)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return {};
  CoefficientMatrix cm = coefficient_matrix(nonzero);
  EchelonForm e = row_reduce(cm.rows);
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < cm.monomials.size(); ++k)
      if (e.reduced(r, k) != 0) terms.push_back(Term{cm.monomials[k], e.reduced(r, k)});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::kSmooth: return "smooth";
    case Smoothness::kSingular: return "singular";
    case Smoothness::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

bool has_linear_form(const Ideal& ideal) {
  for (const auto& g : ideal.groebner_basis())
    if (g.total_degree() == 1) return true;
  return false;
}

Ideal line_scheme_ideal(const NormalizedChart& chart) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < chart.affine_generators.size(); ++i) {
    const int d = chart.affine_generators[i].total_degree();
    for (int j = 2; j <= d; ++j) {
      Polynomial p = chart.tangent_piece(i, static_cast<unsigned>(j));
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  return Ideal(chart.tangent_ring, std::move(gens));
}

SmoothnessVerdict scheme_smoothness(const Ideal& saturated) {
  SmoothnessVerdict v;
  HilbertData h = hilbert_data(saturated);
  if (h.empty()) {
    v.value = Smoothness::kSmooth;
    v.vacuous = true;
    v.note = "empty scheme; smoothness holds vacuously";
    return v;
  }
  const std::size_t n = saturated.ring()->size();
  const std::size_t codim = n - static_cast<std::size_t>(h.dimension);
  if (codim == 0) {
    v.value = Smoothness::kSmooth;
    return v;
  }
  const auto& gens = saturated.groebner_basis();
  auto jac = formal_jacobian(gens);
  Ideal rank_drop = Ideal(saturated.ring(), minors(jac, codim)) + saturated;
  if (!is_projectively_empty(rank_drop)) {
    v.value = Smoothness::kSingular;
    v.note = "Jacobian rank drops below the codimension at some point";
    return v;
  }
  for (const auto& m : minors(jac, codim + 1)) {
    if (!saturated.contains(m)) {
      v.value = Smoothness::kUndetermined;
      v.note = "mixed dimension; global Jacobian criterion does not decide smoothness";
      return v;
    }
  }
  v.value = Smoothness::kSmooth;
  return v;
}

SmoothnessVerdict line_scheme_smooth(const LineSchemeReport& report, const std::vector<Ideal>& decomposition) {
  if (decomposition.empty() || report.is_empty) return report.smooth;
  Ideal whole = ideal_intersect(decomposition);
  if (!scheme_equal(whole, report.J_saturated)) throw DomainError("decomposition does not reproduce the line scheme");
  SmoothnessVerdict v;
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    SmoothnessVerdict part = scheme_smoothness(saturate_irrelevant(decomposition[i]));
    if (part.value != Smoothness::kSmooth) {
      v.value = part.value;
      v.note = "component " + std::to_string(i) + ": " + part.note;
      return v;
    }
    for (std::size_t j = i + 1; j < decomposition.size(); ++j) {
      if (!is_projectively_empty(decomposition[i] + decomposition[j])) {
        v.value = Smoothness::kSingular;
        v.note = "components " + std::to_string(i) + " and " + std::to_string(j) + " meet";
        return v;
      }
    }
  }
  v.value = Smoothness::kSmooth;
  v.note = "checked per component";
  return v;
}

LineSchemeReport line_scheme(const NormalizedChart& chart) {
  LineSchemeReport r;
  r.ring = chart.tangent_ring;
  r.J = line_scheme_ideal(chart);
  for (const auto& g : r.J.generators()) ++r.generator_count_by_degree[g.total_degree()];
  if (chart.n == 0) {
    r.J_saturated = Ideal::unit(chart.tangent_ring);
    r.notes.push_back("zero-dimensional variety; no lines");
  } else {
    r.J_saturated = saturate_irrelevant(r.J);
  }
  r.hilbert = hilbert_data(r.J_saturated);
  r.proj_dimension = r.hilbert.proj_dimension;
  r.is_empty = r.hilbert.empty();
  r.degree = r.is_empty ? Integer(0) : r.hilbert.degree;
  r.hilbert_polynomial = r.hilbert.hilbert_polynomial;
  r.is_degenerate = !r.is_empty && has_linear_form(r.J_saturated);
  r.smooth = scheme_smoothness(r.J_saturated);
  r.notes.push_back("verdicts hold at this point; generic-point statements may fail at special points");
  return r;
}

TangentConeResult tangent_cone(const NormalizedChart& chart) { return tangent_cone(chart, line_scheme_ideal(chart)); }

TangentConeResult tangent_cone(const NormalizedChart& chart, const Ideal& J) {
  if (!same_ring(J.ring(), chart.tangent_ring)) throw RingMismatch();
  std::vector<std::size_t> keep(chart.n);
  for (std::size_t k = 0; k < chart.n; ++k) keep[k] = k;
  std::vector<Polynomial> gens;
  for (const auto& f : chart.affine_generators) {
    Polynomial p = restrict_to_subspace(f, keep, chart.tangent_ring);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  TangentConeResult t{Ideal(chart.tangent_ring, gens), Ideal(chart.tangent_ring), Ideal(chart.tangent_ring)};
  t.I_star = initial_forms_ideal(t.I);
  t.I_star_saturated = chart.n == 0 ? t.I_star : saturate_irrelevant(t.I_star);
  t.saturation_gap = !t.I_star_saturated.same_ideal(t.I_star);
  t.I_star_in_J = J.contains(t.I_star);
  t.linear_form_in_I_star = has_linear_form(t.I_star);
  t.linear_form_in_saturation = has_linear_form(t.I_star_saturated);
  return t;
}

SecondFundamentalForm second_fundamental_form(const NormalizedChart& chart) {
  const std::size_t m = chart.affine_generators.size();
  const std::size_t n = chart.n, c = chart.c;
  // [linear parts | identity]; echelon rows give the conormal combinations.
  RationalMatrix aug(m, c + m);
  for (std::size_t i = 0; i < m; ++i) {
    const Polynomial linear = chart.graded_piece(i, 1);
    for (const auto& t : linear.terms()) {
      std::size_t v = 0;
      while (t.monomial[v] == 0) ++v;
      aug(i, v - n) = t.coefficient;
    }
    aug(i, c + i) = 1;
  }
  EchelonForm e = row_reduce(aug);
  std::size_t linear_rank = 0;
  while (linear_rank < e.pivots.size() && e.pivots[linear_rank] < c) ++linear_rank;
  if (linear_rank != c) throw DomainError("linear parts do not span a space of dimension c");

  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i < m; ++i) pieces.push_back(chart.tangent_piece(i, 2));
  SecondFundamentalForm sff{{}, 0, Ideal(chart.tangent_ring)};
  for (std::size_t row = 0; row < m; ++row) {
    Polynomial q(chart.tangent_ring);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& a = e.reduced(row, c + i);
      if (a != 0) q = q + a * pieces[i];
    }
    sff.quadrics.push_back(std::move(q));
  }
  std::vector<Polynomial> basis = span_basis(sff.quadrics, chart.tangent_ring);
  sff.r = basis.size();
  sff.base_locus = Ideal(chart.tangent_ring, std::move(basis));
  return sff;
}

LinesInBase verify_L_in_B(const LineSchemeReport& report, const SecondFundamentalForm& sff) {
  if (!same_ring(report.J.ring(), sff.base_locus.ring())) throw RingMismatch();
  LinesInBase v;
  v.contained = report.J.contains(sff.base_locus);
  v.equal_as_schemes = scheme_equal(report.J, sff.base_locus);
  return v;
}

bool is_quadratic_presentation(const PresentedScheme& X) {
  for (const auto& g : X.generators())
    if (g.total_degree() != 2) return false;
  return true;
}

Ideal component_ideal_in_chart(const NormalizedChart& chart, const std::vector<RationalVector>& ambient_span) {
  std::vector<RationalVector> rows;
  for (const auto& v : ambient_span) {
    auto z = chart.tangent_coordinates(v);
    if (!z) throw DomainError("component vector is not tangent at the chart point");
    rows.push_back(std::move(*z));
  }
  std::vector<RationalVector> forms;
  if (rows.empty()) {
    for (std::size_t k = 0; k < chart.n; ++k) {
      RationalVector e(chart.n);
      e[k] = 1;
      forms.push_back(std::move(e));
    }
  } else {
    forms = kernel(RationalMatrix::from_rows(rows));
  }
  std::vector<Polynomial> gens;
  for (const auto& f : forms) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < chart.n; ++k)
      if (f[k] != 0) terms.push_back(Term{Monomial::variable(k), f[k]});
    gens.push_back(Polynomial::from_terms(chart.tangent_ring, std::move(terms)));
  }
  return Ideal(chart.tangent_ring, std::move(gens));
}

RationalVector ambient_direction(const NormalizedChart& chart, const RationalVector& d) {
  if (d.size() != chart.n) throw DomainError("direction has the wrong number of coordinates");
  RationalVector z(chart.change_matrix.cols());
  for (std::size_t k = 0; k < chart.n; ++k) z[k + 1] = d[k];
  return chart.change_matrix.apply(z);
}

bool line_lies_on(const PresentedScheme& X, const ProjectivePoint& x, const RationalVector& v) {
  RingPtr t_ring = Ring::make({"t"});
  Polynomial t = Polynomial::variable(t_ring, 0);
  std::vector<Polynomial> line;
  for (std::size_t i = 0; i < x.size(); ++i)
    line.push_back(Polynomial::constant(t_ring, x[i]) + v.at(i) * t);
  for (const auto& f : X.generators()) {
    Polynomial acc(t_ring);
    for (const auto& term : f.terms()) {
      Polynomial prod = Polynomial::constant(t_ring, term.coefficient);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (term.monomial[i] != 0) prod = prod * line[i].pow(term.monomial[i]);
      acc = acc + prod;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

ChartAnalysis analyze_chart(const NormalizedChart& chart) {
  ChartAnalysis a;
  a.lines = line_scheme(chart);
  a.cone = tangent_cone(chart, a.lines.J);
  a.sff = second_fundamental_form(chart);
  a.inclusion = verify_L_in_B(a.lines, a.sff);
  a.quadratic = is_quadratic_presentation(chart.original);
  if (!a.quadratic) a.lines.notes.push_back("quadraticity is checked for the given presentation only");
  return a;
}

}  // namespace fanoline
