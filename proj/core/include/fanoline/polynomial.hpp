#ifndef FANOLINE_POLYNOMIAL_HPP
#define FANOLINE_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fanoline/matrix.hpp"
#include "fanoline/monomial.hpp"
#include "fanoline/rational.hpp"

namespace fanoline {

/// Ordered list of variable names. Rings compare by their names.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  /// Variables prefix+start, ..., prefix+(start+count-1).
  static std::shared_ptr<const Ring> indexed(std::string_view prefix, std::size_t count,
                                             std::size_t start = 0);
  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial over the rationals. Terms are kept sorted by descending
/// graded reverse lex with no zero coefficients; the zero polynomial has no
/// terms. Values are immutable through the public interface.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const;

  const Term& leading_term(const MonomialOrder& ord) const;
  Polynomial monic(const MonomialOrder& ord) const;
  /// Scaled so the grevlex-leading coefficient is 1.
  Polynomial normalized() const { return monic(MonomialOrder::grevlex()); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial times(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;
  Polynomial derivative(std::size_t var) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Canonical text form in the grammar accepted by parse_polynomial.
std::string to_string(const Polynomial& f);

/// poly := term (("+"|"-") term)*, term := [coeff "*"] factor ("*" factor)*,
/// factor := var ["^" uint], coeff := int | int "/" uint. A leading sign and
/// a bare coefficient term are also accepted. Whitespace is insignificant.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Sum of the terms of total degree exactly d.
Polynomial graded_part(const Polynomial& f, unsigned d);

/// Sets every variable outside `keep` to zero; the result lives in `target`,
/// whose i-th variable is f's variable keep[i].
Polynomial restrict_to_subspace(const Polynomial& f, std::span<const std::size_t> keep,
                                const RingPtr& target);
/// Same, with a target ring named after the kept variables.
Polynomial restrict_to_subspace(const Polynomial& f, std::span<const std::size_t> keep);

/// Substitutes x_i -> sum_j M[i][j] x_j. Throws DomainError if M is singular
/// or of the wrong size.
Polynomial apply_linear_change(const Polynomial& f, const RationalMatrix& m);

/// Rewrites f in `target`, sending variable i to variable map[i].
Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> map);

/// Substitutes value for variable `var`; result stays in the same ring.
Polynomial substitute(const Polynomial& f, std::size_t var, const Polynomial& value);

/// f(images[0], ..., images[k-1]); the images share a ring, which the result
/// lives in.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> images);

}  // namespace fanoline

#endif  // FANOLINE_POLYNOMIAL_HPP
