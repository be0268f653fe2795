#ifndef FANOLINE_GROEBNER_HPP
#define FANOLINE_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "fanoline/monomial.hpp"
#include "fanoline/polynomial.hpp"

namespace fanoline {

/// Multivariate division: a remainder of f modulo G with no term divisible by
/// a leading term of G. G must be nonempty and share f's ring.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
/// Buchberger's algorithm with sugar selection and the Gebauer-Moeller
/// criteria. The zero ideal yields an empty basis, the unit ideal {1}.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const MonomialOrder& ord);

/// True iff every S-polynomial of the basis reduces to zero modulo it.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& ord);

/// Finitely generated ideal with a per-order Groebner basis cache. Copies share
/// the cache; the cache is internally synchronized, so an Ideal may be read
/// from several threads.
class Ideal {
 public:
  /// Zero ideal of the ring with no variables.
  Ideal();
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  /// (x_0, ..., x_{n-1}).
  static Ideal irrelevant(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;

  bool contains(const Polynomial& f) const;
  /// Generator-wise containment: other is a subset of *this.
  bool contains(const Ideal& other) const;
  /// Equal as ideals (identical reduced grevlex bases).
  bool same_ideal(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const Polynomial& f) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

std::vector<std::string> to_strings(std::span<const Polynomial> polys);

const std::vector<Polynomial>& groebner_basis(const Ideal& ideal,
                                              const MonomialOrder& ord = MonomialOrder::grevlex());
bool ideal_member(const Polynomial& f, const Ideal& ideal);

/// I intersected with k[remaining variables], via a block elimination order.
/// The result lives in the ring of the remaining variables (original order).
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop);

/// I : J^infinity, one Rabinowitsch elimination per generator of J, then
/// intersected.
Ideal saturate(const Ideal& ideal, const Ideal& by);

/// I : x_var^infinity for homogeneous I, by the reverse lex trick: a grevlex
/// basis with x_var smallest, each element divided by its largest x_var power.
Ideal saturate_by_variable(const Ideal& ideal, std::size_t var);

/// I : (x_0,...,x_n)^infinity for homogeneous I. Uses the saturation by a
/// general linear form and certifies it against the per-variable saturations;
/// falls back to intersecting those when certification fails.
Ideal saturate_irrelevant(const Ideal& ideal);

/// I1 intersected with I2, via elimination of t from t*I1 + (1-t)*I2.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(std::span<const Ideal> ideals);

/// Rational-coefficient polynomial in one variable (ascending coefficients).
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational operator()(const Rational& x) const;

  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const UniPolynomial& p, std::string_view var = "t");

/// Dimension data of S/I for a homogeneous ideal I in S = k[x_0..x_{n-1}].
struct HilbertData {
  bool unit = false;           // I = (1)
  int dimension = -1;          // Krull dimension of S/I; -1 for the unit ideal
  int proj_dimension = -1;     // dimension - 1; -1 means the empty scheme
  Integer degree = 0;          // 0 for the empty scheme
  UniPolynomial hilbert_polynomial;
  /// Hilbert series is numerator(t) / (1-t)^dimension, numerator(1) != 0.
  std::vector<Integer> numerator;
  /// Hilbert function agrees with the polynomial for all degrees >= this.
  int regularity_index = 0;

  bool empty() const { return proj_dimension < 0; }
};

/// Throws DomainError on a non-homogeneous generator.
HilbertData hilbert_data(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::grevlex());
/// dim_k (S/I)_d.
Integer hilbert_function(const Ideal& ideal, unsigned d, const MonomialOrder& ord = MonomialOrder::grevlex());

/// Ideal of lowest-degree forms of all elements of I (the tangent cone at the
/// origin). Throws DomainError if a generator has a nonzero constant term.
Ideal initial_forms_ideal(const Ideal& ideal);

/// Same projective scheme: the saturations by the irrelevant ideal agree.
bool scheme_equal(const Ideal& a, const Ideal& b);
/// Proj(S/I) is empty.
bool is_projectively_empty(const Ideal& ideal);

}  // namespace fanoline

#endif  // FANOLINE_GROEBNER_HPP
