#ifndef FANOLINE_VARIETIES_HPP
#define FANOLINE_VARIETIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanoline/groebner.hpp"
#include "fanoline/matrix.hpp"
#include "fanoline/polynomial.hpp"

namespace fanoline {

/// X = V(f_1, ..., f_m) in P^N with homogeneous generators sorted by
/// descending degree. The dimension comes from the hint when given,
/// otherwise from the Hilbert polynomial of the generator ideal.
class PresentedScheme {
 public:
  PresentedScheme(std::size_t ambient_dim, std::vector<Polynomial> generators, std::optional<int> dim_hint = {});
  /// Generators are read in the ring x0..xN.
  static PresentedScheme from_strings(std::size_t ambient_dim, const std::vector<std::string>& generators,
                                      std::optional<int> dim_hint = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::vector<int> degrees() const;
  const Ideal& ideal() const { return ideal_; }

  /// n; -1 for an empty scheme.
  int dimension() const { return dim_; }
  /// c = N - n.
  int codimension() const { return static_cast<int>(ambient_dim_) - dim_; }
  /// d = sum over the first c generators of (d_i - 1).
  int d_invariant() const;
  bool dimension_from_hint() const { return from_hint_; }

 private:
  std::size_t ambient_dim_;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  Ideal ideal_;
  int dim_ = -1;
  bool from_hint_ = false;
};

/// Point of P^N with exact rational coordinates, not all zero. Coordinates are
/// kept as given; canonical() scales the first nonzero coordinate to 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(RationalVector coordinates);

  const RationalVector& coordinates() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  ProjectivePoint canonical() const;
  bool same_point(const ProjectivePoint& other) const;

 private:
  RationalVector coords_;
};

/// Comma-separated coordinates.
std::string to_string(const ProjectivePoint& p);

/// N+1 comma-separated rationals, or N of them read as the affine point with
/// x0 = 1. The result is canonical. Throws InputError.
ProjectivePoint parse_point(std::string_view text, std::size_t ambient_dim);

bool lies_on(const PresentedScheme& X, const ProjectivePoint& p);

/// m x (N+1) matrix of partial derivatives at p. Throws PointNotOnScheme.
RationalMatrix jacobian_at(const PresentedScheme& X, const ProjectivePoint& p);

/// rank jacobian_at(X, p) == c. Throws PointNotOnScheme.
bool is_smooth_point(const PresentedScheme& X, const ProjectivePoint& p);

/// X in coordinates z = M^{-1} x with the point at (1:0:...:0) and the
/// embedded tangent space spanned by the first n+1 basis vectors.
struct NormalizedChart {
  PresentedScheme original;
  PresentedScheme scheme;          // f_i(M z), same ring as the original
  RationalMatrix change_matrix;    // M; columns: point, tangent basis, completion
  ProjectivePoint point;
  std::size_t n = 0;               // tangent dimension
  std::size_t c = 0;               // codimension
  RingPtr affine_ring;             // y1..yN (z0 = 1)
  RingPtr tangent_ring;            // y1..yn
  std::vector<Polynomial> affine_generators;

  /// f_i^j in y1..yN.
  Polynomial graded_piece(std::size_t i, unsigned j) const;
  /// f_i^j restricted to the tangent coordinates y1..yn.
  Polynomial tangent_piece(std::size_t i, unsigned j) const;
  /// Chart coordinates (z_1..z_n) of an ambient vector in the embedded tangent
  /// space; nullopt when v is not tangent.
  std::optional<RationalVector> tangent_coordinates(const RationalVector& v) const;
};

/// Builds the chart. Tangent columns are chosen greedily from `preferred`
/// (each must be tangent) and then from the Jacobian kernel basis; the
/// completion takes standard basis vectors by lowest index. Throws
/// PointNotOnScheme, SingularPoint, or DomainError when the Jacobian rank is
/// inconsistent with the dimension.
NormalizedChart normalize_chart(const PresentedScheme& X, const ProjectivePoint& x,
                                const std::vector<RationalVector>& preferred = {});

/// Matrix of formal partial derivatives, one row per polynomial.
std::vector<std::vector<Polynomial>> formal_jacobian(std::span<const Polynomial> polys);

/// Distinct nonzero k x k minors, each scaled to leading coefficient 1.
/// Throws DomainError when more than `limit` minors would be expanded.
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& matrix, std::size_t k,
                               std::size_t limit = 200000);

/// (f_1..f_m) + all c x c minors of the formal Jacobian.
Ideal singular_locus_ideal(const PresentedScheme& X);

/// Scheme file: `ambient N [dim n]` then one generator per line; blank lines
/// and lines starting with '#' are ignored. Throws InputError.
PresentedScheme parse_scheme(std::string_view text);
PresentedScheme read_scheme_file(const std::string& path);
std::string format_scheme(const PresentedScheme& X);

}  // namespace fanoline

#endif  // FANOLINE_VARIETIES_HPP
