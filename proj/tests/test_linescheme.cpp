#include <gtest/gtest.h>

#include <random>

#include "fanoline/catalog.hpp"
#include "fanoline/errors.hpp"
#include "fanoline/linescheme.hpp"
#include "test_util.hpp"

namespace fanoline {
namespace {

using testing::ideal;

TEST(LineScheme, SegreOneOneAtTheOrigin) {
  CatalogEntry e = segre(1, 1);
  NormalizedChart chart = normalize_chart(e.scheme, ProjectivePoint(RationalVector{1, 0, 0, 0}));
  LineSchemeReport r = line_scheme(chart);
  EXPECT_TRUE(r.J.same_ideal(ideal(chart.tangent_ring, {"y1*y2"})));
  EXPECT_EQ(r.proj_dimension, 0);
  EXPECT_EQ(r.degree, 2);
  EXPECT_TRUE(r.smooth.is_smooth());
  EXPECT_EQ(r.generator_count_by_degree.at(2), 1);
}

TEST(LineScheme, SegreOneTwoIsMixedWithoutDecomposition) {
  CatalogEntry e = segre(1, 2);
  ProjectivePoint p = rational_point(e, 1);
  NormalizedChart chart = normalize_chart(e.scheme, p);
  LineSchemeReport r = line_scheme(chart);
  EXPECT_EQ(r.smooth.value, Smoothness::kUndetermined);
  std::vector<Ideal> comps;
  for (const auto& span : e.component_spans(p)) comps.push_back(component_ideal_in_chart(chart, span));
  EXPECT_TRUE(line_scheme_smooth(r, comps).is_smooth());
  EXPECT_THROW(line_scheme_smooth(r, {comps[0]}), DomainError);
}

TEST(LineScheme, VeroneseIsEmpty) {
  CatalogEntry e = veronese2(2);
  LineSchemeReport r = line_scheme(normalize_chart(e.scheme, rational_point(e, 1)));
  EXPECT_TRUE(r.is_empty);
  EXPECT_TRUE(r.J_saturated.is_unit());
  EXPECT_EQ(r.proj_dimension, -1);
  EXPECT_EQ(r.degree, 0);
  EXPECT_TRUE(r.smooth.is_smooth());
  EXPECT_TRUE(r.smooth.vacuous);
  EXPECT_FALSE(r.is_degenerate);
}

TEST(LineScheme, CurvesGiveAZeroDimensionalAmbient) {
  PresentedScheme line = PresentedScheme::from_strings(2, {"x2"});
  LineSchemeReport a = line_scheme(normalize_chart(line, ProjectivePoint(RationalVector{1, 0, 0})));
  EXPECT_EQ(a.proj_dimension, 0);
  EXPECT_EQ(a.degree, 1);
  PresentedScheme conic = PresentedScheme::from_strings(2, {"x0*x2 - x1^2"});
  LineSchemeReport b = line_scheme(normalize_chart(conic, ProjectivePoint(RationalVector{1, 0, 0})));
  EXPECT_TRUE(b.is_empty);
}

TEST(LineScheme, GeneratorCountIsBounded) {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, 1));
    int bound = 0;
    for (int d : e.scheme.degrees()) bound += d - 1;
    EXPECT_LE(static_cast<int>(line_scheme_ideal(chart).generators().size()), bound) << name;
  }
}

TEST(LineScheme, DegenerateExactlyOnScrolls) {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    LineSchemeReport r = line_scheme(normalize_chart(e.scheme, rational_point(e, 1)));
    EXPECT_EQ(r.is_degenerate, name.rfind("scroll", 0) == 0) << name;
  }
}

// A tangent direction d is a zero of J exactly when the line x + t * v(d)
// lies on X; v(d) is read in ambient coordinates and tested by substitution.
TEST(LineScheme, LineMembershipOracle) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (const auto& name : {"segre_1_1", "segre_1_2", "segre_2_2", "quadric_2", "quadric_3", "scroll_1_2", "plucker_3"}) {
    CatalogEntry e = catalog_entry(name);
    for (std::uint64_t seed : {1u, 2u}) {
      ProjectivePoint x = rational_point(e, seed);
      NormalizedChart chart = normalize_chart(e.scheme, x);
      LineSchemeReport r = line_scheme(chart);
      int agreements = 0, lines = 0;
      for (int trial = 0; trial < 60; ++trial) {
        RationalVector d(chart.n);
        for (auto& q : d) q = coord(rng);
        if (std::all_of(d.begin(), d.end(), [](const Rational& q) { return q == 0; })) continue;
        bool zero = std::all_of(r.J_saturated.generators().begin(), r.J_saturated.generators().end(),
                                [&](const Polynomial& g) { return g.evaluate(d) == 0; });
        bool on_x = line_lies_on(e.scheme, x, ambient_direction(chart, d));
        EXPECT_EQ(zero, on_x) << name;
        agreements += zero == on_x;
        lines += on_x;
      }
      EXPECT_GT(agreements, 0);
      if (e.component_spans) {
        for (const auto& span : e.component_spans(x))
          for (const auto& v : span) {
            auto d = chart.tangent_coordinates(v);
            ASSERT_TRUE(d.has_value());
            if (std::all_of(d->begin(), d->end(), [](const Rational& q) { return q == 0; })) continue;
            for (const auto& g : r.J_saturated.generators()) EXPECT_EQ(g.evaluate(*d), 0) << name;
          }
      }
    }
  }
}

TEST(LineScheme, ScrollRulingIsTheLine) {
  CatalogEntry e = scroll(1, 2);
  ProjectivePoint x = rational_point(e, 3);
  NormalizedChart chart = normalize_chart(e.scheme, x);
  LineSchemeReport r = line_scheme(chart);
  ASSERT_EQ(r.proj_dimension, 0);
  // The ruling through x = (l s, l t, m s^2, m s t, m t^2) joins (s, t, 0, 0, 0) and (0, 0, s^2, s t, t^2).
  RationalVector v(x.size());
  v[0] = x[0];
  v[1] = x[1];
  ASSERT_TRUE(line_lies_on(e.scheme, x, v));
  auto d = chart.tangent_coordinates(v);
  ASSERT_TRUE(d.has_value());
  for (const auto& g : r.J_saturated.generators()) EXPECT_EQ(g.evaluate(*d), 0);
}

TEST(TangentCone, QuadraticChartsAgreeGeneratorForGenerator) {
  for (const auto& name : {"segre_1_2", "plucker_4", "quadric_3", "veronese2_2"}) {
    CatalogEntry e = catalog_entry(name);
    NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, 2));
    TangentConeResult t = tangent_cone(chart);
    Ideal J = line_scheme_ideal(chart);
    EXPECT_EQ(t.I.generators(), J.generators()) << name;
    EXPECT_EQ(t.I_star.generators(), J.generators()) << name;
    EXPECT_TRUE(t.I_star_in_J);
  }
}

TEST(TangentCone, ScrollGap) {
  for (auto [a, b] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
    CatalogEntry e = scroll(a, b);
    TangentConeResult t = tangent_cone(normalize_chart(e.scheme, rational_point(e, 1)));
    EXPECT_TRUE(t.saturation_gap);
    EXPECT_FALSE(t.linear_form_in_I_star);
    EXPECT_TRUE(t.linear_form_in_saturation);
  }
}

TEST(TangentCone, CubicSurfaceInitialForm) {
  CatalogEntry e = fermat_cubic();
  NormalizedChart chart = normalize_chart(e.scheme, e.known_points.front());
  TangentConeResult t = tangent_cone(chart);
  Polynomial f2 = chart.tangent_piece(0, 2);
  ASSERT_FALSE(f2.is_zero());
  EXPECT_EQ(t.I.generators().size(), 1u);
  EXPECT_TRUE(t.I_star.same_ideal(Ideal(chart.tangent_ring, {f2})));
  EXPECT_TRUE(t.I_star_in_J);
}

TEST(TangentCone, InitialFormsLieInJ) {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, 3));
    TangentConeResult t = tangent_cone(chart);
    EXPECT_TRUE(t.I_star_in_J) << name;
    Ideal J = line_scheme_ideal(chart);
    for (const auto& g : t.I_star.generators()) EXPECT_TRUE(J.contains(g)) << name;
  }
}

TEST(SecondForm, HypersurfaceHasOneQuadric) {
  for (const auto& name : {"quadric_2", "quadric_4", "fermat_cubic", "plucker_3"}) {
    CatalogEntry e = catalog_entry(name);
    NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, 1));
    SecondFundamentalForm sff = second_fundamental_form(chart);
    ASSERT_EQ(sff.quadrics.size(), 1u);
    EXPECT_LE(sff.r, 1u);
    EXPECT_TRUE(Ideal(chart.tangent_ring, {chart.tangent_piece(0, 2)}).same_ideal(sff.base_locus));
  }
}

TEST(SecondForm, BaseLocusIsTheSpanOfQuadraticPieces) {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, 2));
    SecondFundamentalForm sff = second_fundamental_form(chart);
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i < chart.affine_generators.size(); ++i) pieces.push_back(chart.tangent_piece(i, 2));
    EXPECT_TRUE(Ideal(chart.tangent_ring, pieces).same_ideal(sff.base_locus)) << name;
    EXPECT_EQ(sff.base_locus.generators().size(), sff.r);
    if (is_quadratic_presentation(e.scheme)) EXPECT_LE(sff.r, chart.c) << name;
  }
}

TEST(SecondForm, QuadraticEntriesHaveLEqualB) {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    if (!e.expected.quadratic) continue;
    NormalizedChart chart = normalize_chart(e.scheme, rational_point(e, 1));
    ChartAnalysis a = analyze_chart(chart);
    EXPECT_TRUE(a.inclusion.contained) << name;
    EXPECT_TRUE(a.inclusion.equal_as_schemes) << name;
    EXPECT_TRUE(scheme_equal(a.cone.I_star, a.lines.J)) << name;
    EXPECT_TRUE(scheme_equal(a.cone.I, a.sff.base_locus)) << name;
  }
}

TEST(Smoothness, SmallSchemes) {
  RingPtr r = Ring::indexed("y", 2, 1);
  EXPECT_TRUE(scheme_smoothness(ideal(r, {"y1*y2"})).is_smooth());
  EXPECT_EQ(scheme_smoothness(ideal(r, {"y1^2"})).value, Smoothness::kSingular);
  RingPtr s = Ring::indexed("y", 3, 1);
  EXPECT_EQ(scheme_smoothness(ideal(s, {"y1*y2"})).value, Smoothness::kSingular);
  EXPECT_TRUE(scheme_smoothness(ideal(s, {"y1*y2 - y3^2"})).is_smooth());
  EXPECT_EQ(scheme_smoothness(ideal(s, {"y1^2*y3 - y2^3"})).value, Smoothness::kSingular);
  EXPECT_TRUE(scheme_smoothness(Ideal::unit(s)).vacuous);
}

TEST(Presentation, Quadraticity) {
  EXPECT_TRUE(is_quadratic_presentation(segre(1, 2).scheme));
  EXPECT_TRUE(is_quadratic_presentation(veronese2(2).scheme));
  EXPECT_TRUE(is_quadratic_presentation(plucker(4).scheme));
  EXPECT_FALSE(is_quadratic_presentation(fermat_cubic().scheme));
  PresentedScheme padded = PresentedScheme::from_strings(3, {"x0*x3 - x1*x2", "x0^2*x3 - x0*x1*x2"}, 2);
  EXPECT_FALSE(is_quadratic_presentation(padded));
}

}  // namespace
}  // namespace fanoline
