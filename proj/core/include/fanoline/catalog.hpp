#ifndef FANOLINE_CATALOG_HPP
#define FANOLINE_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanoline/groebner.hpp"
#include "fanoline/varieties.hpp"

namespace fanoline {

/// Coordinate-free invariants of the line scheme at a general point.
struct ExpectedLines {
  int dim = -1;
  Integer degree = 0;
  bool empty = true;
  bool degenerate = false;
  bool quadratic = false;
  std::optional<bool> saturation_gap;
  /// Ideal in y1..yn whose Hilbert polynomial L must share.
  std::optional<Ideal> model;
  /// Dimensions of the linear components, when known.
  std::vector<int> component_dims;
};

/// Spans (ambient vectors) of the linear components of L at a point.
using ComponentSpans = std::function<std::vector<std::vector<RationalVector>>(const ProjectivePoint&)>;

struct CatalogEntry {
  std::string name;
  std::string description;
  PresentedScheme scheme;
  /// Image polynomials in the parameter ring; empty for search entries.
  std::vector<Polynomial> parametrization;
  /// Indices of parameters that must be nonzero when sampling.
  std::vector<std::size_t> nonzero_parameters;
  /// Points known to lie on the scheme (searched or planted).
  std::vector<ProjectivePoint> known_points;
  ExpectedLines expected;
  ComponentSpans component_spans;
};

/// P^a x P^b, 1 <= a <= b, ab + a + b <= 15.
CatalogEntry segre(int a, int b);
/// nu_2(P^n), 2 <= n <= 4.
CatalogEntry veronese2(int n);
/// G(1, m) in its Pluecker embedding, 3 <= m <= 4.
CatalogEntry plucker(int m);
/// Rational normal surface scroll S(a1, a2), 1 <= a1 <= a2, 3 <= a1 + a2 <= 5.
CatalogEntry scroll(int a1, int a2);
/// Smooth n-dimensional quadric in P^{n+1}, 2 <= n <= 5.
CatalogEntry quadric(int n);
/// Smooth complete intersection of random dense forms in P^N passing
/// through the coordinate points and (1:...:1); resampled up to 10 times
/// until the singular locus is empty.
CatalogEntry complete_intersection(int N, const std::vector<int>& degrees, std::uint64_t seed);
/// x0^3 + x1^3 + x2^3 + x3^3 with witness points off its lines.
CatalogEntry fermat_cubic();

/// Default catalog, in listing order.
std::vector<std::string> catalog_names();
/// Throws InputError for an unknown name.
CatalogEntry catalog_entry(const std::string& name);

/// A smooth point of the entry. Parametrized entries evaluate the
/// parametrization at small seeded integers; the others take the seed-th
/// known smooth point.
ProjectivePoint rational_point(const CatalogEntry& entry, std::uint64_t seed);

/// Generators vanish identically on the parametrization.
bool parametrization_is_valid(const CatalogEntry& entry);

/// Projective points with integer coordinates of height <= max_height, in
/// increasing height; canonical representatives only.
std::vector<ProjectivePoint> points_by_height(std::size_t ambient_dim, int max_height);

}  // namespace fanoline

#endif  // FANOLINE_CATALOG_HPP
