#include "fanoline/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanoline/errors.hpp"

namespace fanoline {

namespace {

constexpr unsigned kMaxExponent = 255;

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw DomainError("variable index exceeds supported ring size");
  if (e > kMaxExponent) throw DomainError("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    q.exps_[i] = static_cast<std::uint8_t>(other.exps_[i] - exps_[i]);
  }
  q.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) throw DomainError("exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += m.exps_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  unsigned deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    deg += m.exps_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kLex:
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case Kind::kGrLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case Kind::kGrevLex:
      return grevlex_range(a, b, 0, kMaxVars);
    case Kind::kBlock: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, kMaxVars);
    }
    case Kind::kHomogenizedLocal:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      return grevlex_range(a, b, 1, kMaxVars);
  }
  throw std::logic_error("unknown monomial order");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::kLex: return "lex";
    case Kind::kGrLex: return "grlex";
    case Kind::kGrevLex: return "grevlex";
    case Kind::kBlock: return "block(" + std::to_string(block_) + ")";
    case Kind::kHomogenizedLocal: return "homogenized-local";
  }
  return "?";
}

}  // namespace fanoline
