#ifndef FANOLINE_LINESCHEME_HPP
#define FANOLINE_LINESCHEME_HPP

#include <map>
#include <string>
#include <vector>

#include "fanoline/groebner.hpp"
#include "fanoline/varieties.hpp"

namespace fanoline {

enum class Smoothness { kSmooth, kSingular, kUndetermined };

std::string to_string(Smoothness s);

struct SmoothnessVerdict {
  Smoothness value = Smoothness::kUndetermined;
  bool vacuous = false;  // the scheme is empty
  std::string note;

  bool is_smooth() const { return value == Smoothness::kSmooth; }
};

/// Lines through the chart point, as a subscheme of P^{n-1} in y1..yn.
struct LineSchemeReport {
  RingPtr ring;
  Ideal J;
  Ideal J_saturated;
  HilbertData hilbert;
  int proj_dimension = -1;
  Integer degree = 0;
  UniPolynomial hilbert_polynomial;
  bool is_empty = true;
  SmoothnessVerdict smooth;
  bool is_degenerate = false;
  std::map<int, int> generator_count_by_degree;
  std::vector<std::string> notes;
};

struct TangentConeResult {
  Ideal I;
  Ideal I_star;
  Ideal I_star_saturated;
  bool saturation_gap = false;
  bool I_star_in_J = false;
  bool linear_form_in_I_star = false;
  bool linear_form_in_saturation = false;
};

struct SecondFundamentalForm {
  std::vector<Polynomial> quadrics;  // one per conormal combination, zeros kept
  std::size_t r = 0;
  Ideal base_locus;                  // r independent quadrics
};

struct LinesInBase {
  bool contained = false;
  bool equal_as_schemes = false;
};

/// J = (all nonzero tangent pieces f_i^j, j >= 2).
Ideal line_scheme_ideal(const NormalizedChart& chart);

LineSchemeReport line_scheme(const NormalizedChart& chart);

TangentConeResult tangent_cone(const NormalizedChart& chart);
TangentConeResult tangent_cone(const NormalizedChart& chart, const Ideal& J);

SecondFundamentalForm second_fundamental_form(const NormalizedChart& chart);

LinesInBase verify_L_in_B(const LineSchemeReport& report, const SecondFundamentalForm& sff);

/// Jacobian criterion on a saturated homogeneous ideal. Reports undetermined
/// when the scheme has points of larger embedding codimension than its top
/// component and no decomposition settles it.
SmoothnessVerdict scheme_smoothness(const Ideal& saturated);

/// With a nonempty decomposition, checks each component and their pairwise
/// disjointness; the decomposition must define the same scheme as J_saturated
/// (DomainError otherwise).
SmoothnessVerdict line_scheme_smooth(const LineSchemeReport& report, const std::vector<Ideal>& decomposition = {});

/// All given generators are quadrics.
bool is_quadratic_presentation(const PresentedScheme& X);

/// Ideal in y1..yn of the linear subspace of P^{n-1} spanned by the tangent
/// directions of the given ambient vectors (vectors along the point itself
/// are ignored). Throws DomainError for a non-tangent vector.
Ideal component_ideal_in_chart(const NormalizedChart& chart, const std::vector<RationalVector>& ambient_span);

/// Ambient vector M * (0, d, 0, ..., 0) for tangent coordinates d.
RationalVector ambient_direction(const NormalizedChart& chart, const RationalVector& d);

/// True iff every generator of X vanishes identically on x + t * v.
bool line_lies_on(const PresentedScheme& X, const ProjectivePoint& x, const RationalVector& v);

/// Degree-1 elements in a homogeneous ideal.
bool has_linear_form(const Ideal& ideal);

/// Everything computed at one chart.
struct ChartAnalysis {
  LineSchemeReport lines;
  TangentConeResult cone;
  SecondFundamentalForm sff;
  LinesInBase inclusion;
  bool quadratic = false;
};

ChartAnalysis analyze_chart(const NormalizedChart& chart);

}  // namespace fanoline

#endif  // FANOLINE_LINESCHEME_HPP
