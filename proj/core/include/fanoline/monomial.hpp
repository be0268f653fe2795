#ifndef FANOLINE_MONOMIAL_HPP
#define FANOLINE_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace fanoline {

/// Largest supported ring size. Catalog entries stay well below this
/// (at most ~16 variables including elimination variables).
inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with a cached total degree. Unused trailing slots are zero,
/// so comparisons never need the ring size.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  const std::array<std::uint8_t, kMaxVars>& exponents() const { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Total multiplicative well-orders on monomials.
///
/// kBlock compares the first `block` variables by graded reverse lex and breaks
/// ties with graded reverse lex on the remaining variables; it eliminates the
/// first block. kHomogenizedLocal is the order used by the tangent-cone
/// algorithm: total degree, then a larger exponent of variable 0 wins, then
/// graded reverse lex on the other variables.
class MonomialOrder {
 public:
  enum class Kind { kLex, kGrLex, kGrevLex, kBlock, kHomogenizedLocal };

  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(Kind kind, unsigned block = 0)
      : kind_(kind), block_(block) {}

  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::kLex); }
  static constexpr MonomialOrder grlex() { return MonomialOrder(Kind::kGrLex); }
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevLex); }
  static constexpr MonomialOrder block_elimination(unsigned first_block) {
    return MonomialOrder(Kind::kBlock, first_block);
  }
  static constexpr MonomialOrder homogenized_local() {
    return MonomialOrder(Kind::kHomogenizedLocal);
  }

  Kind kind() const { return kind_; }
  unsigned block() const { return block_; }
  bool is_graded() const { return kind_ != Kind::kLex && kind_ != Kind::kBlock; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ != b.kind_ ? a.kind_ < b.kind_ : a.block_ < b.block_;
  }

 private:
  Kind kind_ = Kind::kGrevLex;
  unsigned block_ = 0;
};

}  // namespace fanoline

#endif  // FANOLINE_MONOMIAL_HPP
