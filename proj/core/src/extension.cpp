#include "fanoline/extension.hpp"

#include <algorithm>

#include "fanoline/errors.hpp"

namespace fanoline {

namespace {

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

const PresentedScheme& require_X(const ExtensionContext& ctx) {
  if (!ctx.X || !ctx.H) throw InputError("the context has no extension X with hyperplane H");
  return *ctx.X;
}

Polynomial lift_to(const Polynomial& f, const RingPtr& target) {
  std::vector<std::size_t> map(f.nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return remap(f, target, map);
}

bool linear_ideal(const Ideal& P) {
  for (const auto& g : P.groebner_basis())
    if (g.total_degree() != 1 || !g.is_homogeneous()) return false;
  return true;
}

}  // namespace

PresentedScheme cone(const PresentedScheme& Y) {
  const std::size_t N = Y.ambient_dim();
  RingPtr ring = Ring::indexed("x", N + 2);
  std::vector<Polynomial> gens;
  for (const auto& g : Y.generators()) gens.push_back(lift_to(g, ring));
  std::optional<int> dim;
  if (Y.dimension() >= 0) dim = Y.dimension() + 1;
  return PresentedScheme(N + 1, std::move(gens), dim);
}

ProjectivePoint cone_vertex(const PresentedScheme& Y) {
  RationalVector v(Y.ambient_dim() + 2);
  v.back() = 1;
  return ProjectivePoint(std::move(v));
}

ExtensionContext cone_context(const PresentedScheme& Y, const ProjectivePoint& y) {
  PresentedScheme X = cone(Y);
  Polynomial H = Polynomial::variable(X.ring(), Y.ambient_dim() + 1);
  return ExtensionContext{Y, X, H, y};
}

std::size_t hyperplane_variable(const Polynomial& H) {
  if (H.is_zero() || !H.is_homogeneous() || H.total_degree() != 1) throw InputError("H must be a nonzero linear form");
  std::size_t k = 0;
  for (std::size_t i = 0; i < H.nvars(); ++i)
    if (H.involves(i)) k = i;
  return k;
}

RationalVector embed_in_hyperplane(const Polynomial& H, const RationalVector& v) {
  const std::size_t k = hyperplane_variable(H);
  if (v.size() + 1 != H.nvars()) throw DomainError("vector size does not match the hyperplane");
  RationalVector coeff(H.nvars());
  for (const auto& t : H.terms()) {
    std::size_t i = 0;
    while (t.monomial[i] == 0) ++i;
    coeff[i] = t.coefficient;
  }
  RationalVector out;
  Rational s = 0;
  for (std::size_t i = 0, j = 0; i < H.nvars(); ++i) {
    if (i == k) {
      out.push_back(0);
      continue;
    }
    out.push_back(v[j]);
    s += coeff[i] * v[j++];
  }
  out[k] = -s / coeff[k];
  return out;
}

bool is_cone_with_vertex(const PresentedScheme& X, const ProjectivePoint& p) {
  if (p.size() != X.ambient_dim() + 1 || !lies_on(X, p)) return false;
  for (const auto& g : X.generators()) {
    Polynomial d(X.ring());
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) d = d + p[i] * g.derivative(i);
    if (!X.ideal().contains(d)) return false;
  }
  return true;
}

bool verify_hyperplane_section(const ExtensionContext& ctx) {
  const PresentedScheme& X = require_X(ctx);
  const Polynomial& H = *ctx.H;
  if (ctx.Y.ambient_dim() + 1 != X.ambient_dim()) throw InputError("X must live in P^{N+1}");
  if (X.ideal().contains(H)) throw DomainError("H vanishes on X");
  const std::size_t k = hyperplane_variable(H);
  Rational hk;
  for (const auto& t : H.terms())
    if (t.monomial[k] == 1) hk = t.coefficient;
  Polynomial value = Rational(-1 / hk) * (H - hk * Polynomial::variable(X.ring(), k));
  std::vector<std::size_t> map(X.ring()->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i < k ? i : (i == k ? 0 : i - 1);
  std::vector<Polynomial> restricted;
  for (const auto& g : X.generators()) {
    Polynomial s = substitute(g, k, value);
    if (!s.is_zero()) restricted.push_back(remap(s, ctx.Y.ring(), map));
  }
  return scheme_equal(Ideal(ctx.Y.ring(), std::move(restricted)), ctx.Y.ideal());
}

ExtensionCharts extension_charts(const ExtensionContext& ctx) {
  const PresentedScheme& X = require_X(ctx);
  const Polynomial& H = *ctx.H;
  NormalizedChart cy = normalize_chart(ctx.Y, ctx.y);
  ProjectivePoint x(embed_in_hyperplane(H, ctx.y.coordinates()));
  if (!lies_on(X, x)) throw PointNotOnScheme();
  if (X.dimension() != ctx.Y.dimension() + 1) throw DomainError("dim X must be dim Y + 1");
  RationalMatrix jac = jacobian_at(X, x);
  std::vector<RationalVector> preferred;
  for (std::size_t k = 1; k <= cy.n; ++k) {
    RationalVector v = embed_in_hyperplane(H, cy.change_matrix.column(k));
    if (!X.generators().empty() && !is_zero_vector(jac.apply(v)))
      throw DomainError("the tangent space of Y is not contained in that of X");
    preferred.push_back(std::move(v));
  }
  NormalizedChart cx = normalize_chart(X, x, preferred);
  for (std::size_t k = 1; k <= cy.n; ++k)
    if (cx.change_matrix.column(k) != preferred[k - 1])
      throw DomainError("the tangent space of Y is not contained in that of X");
  return ExtensionCharts{std::move(cy), std::move(cx)};
}

bool verify_line_restriction(const ExtensionContext& ctx) {
  ExtensionCharts charts = extension_charts(ctx);
  const std::size_t n = charts.Y.n;
  Ideal JX = line_scheme_ideal(charts.X);
  Ideal JY = line_scheme_ideal(charts.Y);
  std::vector<std::size_t> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = i;
  std::vector<Polynomial> cut;
  for (const auto& g : JX.generators()) {
    Polynomial r = restrict_to_subspace(g, keep, charts.Y.tangent_ring);
    if (!r.is_zero()) cut.push_back(std::move(r));
  }
  return scheme_equal(Ideal(charts.Y.tangent_ring, std::move(cut)), JY);
}

namespace {

std::vector<RationalVector> directions_in_chart(const NormalizedChart& cx, const Ideal& JX,
                                                const std::vector<ProjectivePoint>& sing_points) {
  std::vector<RationalVector> out;
  for (const auto& p : sing_points) {
    if (p.size() != cx.point.size()) throw InputError("singular point has the wrong number of coordinates");
    if (p.same_point(cx.point)) throw DomainError("singular point coincides with y");
    std::optional<RationalVector> d = cx.tangent_coordinates(p.coordinates());
    if (!d || is_zero_vector(*d)) continue;
    bool on_lines = std::all_of(JX.generators().begin(), JX.generators().end(),
                                [&](const Polynomial& g) { return g.evaluate(*d) == 0; });
    if (on_lines) out.push_back(ProjectivePoint(*d).canonical().coordinates());
  }
  return out;
}

}  // namespace

std::vector<RationalVector> singular_line_directions(const ExtensionContext& ctx,
                                                     const std::vector<ProjectivePoint>& sing_points) {
  ExtensionCharts charts = extension_charts(ctx);
  return directions_in_chart(charts.X, line_scheme_ideal(charts.X), sing_points);
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::kNoVerdict:
      return "no-verdict";
    case Conclusion::kConeForced:
      return "cone-forced";
    case Conclusion::kIsAConeVerified:
      return "is-a-cone-verified";
  }
  return "?";
}

ExtensionReport criterion_report(const ExtensionContext& ctx, const std::vector<Ideal>& decomposition,
                                 const std::vector<ProjectivePoint>& sing_points) {
  ExtensionReport rep;
  NormalizedChart cy = normalize_chart(ctx.Y, ctx.y);
  LineSchemeReport ly = line_scheme(cy);
  rep.n = cy.n;

  if (!decomposition.empty()) {
    for (const auto& P : decomposition)
      if (!same_ring(P.ring(), cy.tangent_ring)) throw DomainError("decomposition ideals must live in y1..yn");
    if (!scheme_equal(ideal_intersect(decomposition), ly.J_saturated))
      throw DomainError("decomposition does not define the line scheme");
    rep.decomposition_verified = true;
    for (const auto& P : decomposition) rep.components.push_back(ComponentCheck{P, hilbert_data(P).proj_dimension, {}, {}, {}});
    const int n = static_cast<int>(cy.n);
    for (std::size_t i = 0; i < rep.components.size(); ++i)
      for (std::size_t j = i + 1; j < rep.components.size(); ++j) {
        int a = rep.components[i].dim, b = rep.components[j].dim;
        if (a < 0 || b < 0) continue;
        rep.base_inequality = rep.base_inequality || a + b >= n - 1;
        rep.extended_inequality = rep.extended_inequality || (a + b + 2 >= n && std::max(a, b) >= 1);
      }
    rep.criterion_fires = rep.extended_inequality;
  } else {
    rep.notes.push_back("no decomposition supplied; the intersection criterion is not evaluated");
  }

  if (ctx.X) {
    rep.hyperplane_section_ok = verify_hyperplane_section(ctx);
    rep.line_restriction_ok = verify_line_restriction(ctx);
    ExtensionCharts charts = extension_charts(ctx);
    Ideal JX = line_scheme_ideal(charts.X);
    rep.singular_line_directions = directions_in_chart(charts.X, JX, sing_points);
    std::optional<RationalVector> vertex_direction;
    for (const auto& p : sing_points) {
      if (!is_cone_with_vertex(*ctx.X, p)) continue;
      rep.is_cone = true;
      std::optional<RationalVector> d = charts.X.tangent_coordinates(p.coordinates());
      if (!d) continue;
      RationalVector dir = ProjectivePoint(*d).canonical().coordinates();
      if (std::find(rep.singular_line_directions.begin(), rep.singular_line_directions.end(), dir) !=
          rep.singular_line_directions.end())
        vertex_direction = dir;
    }
    rep.vertex_direction_found = vertex_direction.has_value();
    if (vertex_direction && (*vertex_direction)[cy.n] != 0) {
      // Join each linear component with the vertex direction v: l(y) - l(v)/v_{n+1} y_{n+1}.
      const RationalVector& v = *vertex_direction;
      RationalVector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cy.n));
      for (auto& comp : rep.components) {
        if (!linear_ideal(comp.ideal)) continue;
        std::vector<Polynomial> gens;
        for (const auto& l : comp.ideal.groebner_basis()) {
          Polynomial lifted = lift_to(l, charts.X.tangent_ring);
          Rational shift = l.evaluate(head) / v[cy.n];
          gens.push_back(lifted - shift * Polynomial::variable(charts.X.tangent_ring, cy.n));
        }
        Ideal ext(charts.X.tangent_ring, std::move(gens));
        comp.extended_dim = hilbert_data(ext).proj_dimension;
        comp.extended_in_lines = ext.contains(JX);
        comp.extended = std::move(ext);
      }
    }
  }

  if (rep.is_cone && rep.vertex_direction_found)
    rep.conclusion = Conclusion::kIsAConeVerified;
  else if (rep.criterion_fires)
    rep.conclusion = Conclusion::kConeForced;
  if (rep.decomposition_verified && rep.base_inequality != rep.extended_inequality)
    rep.notes.push_back("the base and extended dimension inequalities disagree");
  rep.notes.push_back("absence of a smooth extension of L_{y,Y} is a hypothesis left to the user");
  return rep;
}

}  // namespace fanoline
