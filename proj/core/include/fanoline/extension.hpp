#ifndef FANOLINE_EXTENSION_HPP
#define FANOLINE_EXTENSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "fanoline/groebner.hpp"
#include "fanoline/linescheme.hpp"
#include "fanoline/varieties.hpp"

namespace fanoline {

/// Y in P^N, optionally an extension X in P^{N+1} with hyperplane H, and a
/// point y of Y. Y is read in the coordinates of H left after eliminating the
/// last variable with a nonzero coefficient in H.
struct ExtensionContext {
  PresentedScheme Y;
  std::optional<PresentedScheme> X;
  std::optional<Polynomial> H;
  ProjectivePoint y;
};

/// Same generators in P^{N+1}; the vertex is (0:...:0:1).
PresentedScheme cone(const PresentedScheme& Y);
ProjectivePoint cone_vertex(const PresentedScheme& Y);
/// Context for cone(Y) with H = x_{N+1}.
ExtensionContext cone_context(const PresentedScheme& Y, const ProjectivePoint& y);

/// Index of the variable of X eliminated by H.
std::size_t hyperplane_variable(const Polynomial& H);
/// Image of a vector of k^{N+1} in H inside k^{N+2}.
RationalVector embed_in_hyperplane(const Polynomial& H, const RationalVector& v);

/// X is a cone with vertex p: p lies on X and every generator's derivative
/// along p lies in I(X).
bool is_cone_with_vertex(const PresentedScheme& X, const ProjectivePoint& p);

/// I(X) restricted to H defines the same scheme as I(Y). Throws DomainError
/// when H vanishes on X.
bool verify_hyperplane_section(const ExtensionContext& ctx);

/// Charts of Y at y and of X at the image of y, compatible so that the
/// hyperplane y_{n+1} = 0 of the X tangent coordinates is the Y tangent space.
struct ExtensionCharts {
  NormalizedChart Y;
  NormalizedChart X;
};
/// Throws DomainError when t_y Y is not contained in t_y X.
ExtensionCharts extension_charts(const ExtensionContext& ctx);

/// L_{y,X} cut by the hyperplane of t_y Y equals L_{y,Y} as schemes.
bool verify_line_restriction(const ExtensionContext& ctx);

/// Tangent directions (in the X chart) of the lines <y, p> lying in V(J_X),
/// one per qualifying singular point. Throws DomainError when some p = y.
std::vector<RationalVector> singular_line_directions(const ExtensionContext& ctx,
                                                     const std::vector<ProjectivePoint>& sing_points);

enum class Conclusion { kNoVerdict, kConeForced, kIsAConeVerified };
std::string to_string(Conclusion c);

struct ComponentCheck {
  Ideal ideal;  // in the Y chart tangent ring
  int dim = -1;
  /// Join with the vertex direction inside the X chart, for linear components.
  std::optional<Ideal> extended;
  std::optional<int> extended_dim;
  std::optional<bool> extended_in_lines;
};

struct ExtensionReport {
  std::optional<bool> hyperplane_section_ok;
  std::optional<bool> line_restriction_ok;
  bool decomposition_verified = false;
  std::vector<ComponentCheck> components;
  std::size_t n = 0;
  /// Some pair with dim_i + dim_j >= n - 1.
  bool base_inequality = false;
  /// Some pair with (dim_i + 1) + (dim_j + 1) >= n and a positive-dimensional member.
  bool extended_inequality = false;
  bool criterion_fires = false;
  std::vector<RationalVector> singular_line_directions;
  bool is_cone = false;
  bool vertex_direction_found = false;
  Conclusion conclusion = Conclusion::kNoVerdict;
  std::vector<std::string> notes;
};

/// Decomposition ideals live in the tangent ring of normalize_chart(Y, y);
/// their intersection must define the scheme L_{y,Y} (DomainError otherwise).
ExtensionReport criterion_report(const ExtensionContext& ctx, const std::vector<Ideal>& decomposition,
                                 const std::vector<ProjectivePoint>& sing_points = {});

}  // namespace fanoline

#endif  // FANOLINE_EXTENSION_HPP
