#include "fanoline/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <utility>

#include "fanoline/errors.hpp"

namespace fanoline {

namespace {

constexpr MonomialOrder kCanonical = MonomialOrder::grevlex();

using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Term> sorted_from_map(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return kCanonical.greater(a.monomial, b.monomial); });
  return out;
}

// Merge of two canonical term lists: a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : kCanonical.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].monomial, sign > 0 ? b[j].coefficient : Rational(-b[j].coefficient)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (s != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

class Parser {
 public:
  Parser(std::string text, const RingPtr& ring) : s_(std::move(text)), ring_(ring) {}

  Polynomial run() {
    if (s_.empty()) throw InputError("empty polynomial");
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
    terms.push_back(term(sign));
    while (pos_ < s_.size()) {
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-' ? -1 : 1));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + s_ + "'");
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
    if (d.empty()) fail("expected digits");
    return d;
  }

  Term term(int sign) {
    Rational coeff = sign;
    Monomial mono;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits(), 10);
      Integer den = 1;
      if (peek() == '/') {
        get();
        den = Integer(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      coeff *= q;
      if (peek() == '*') {
        get();
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      factor(mono);
      while (peek() == '*') {
        get();
        factor(mono);
      }
    }
    return Term{mono, coeff};
  }

  void factor(Monomial& mono) {
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected variable");
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name.push_back(get());
    auto idx = ring_->index_of(name);
    if (!idx) fail("unknown variable '" + name + "'");
    unsigned power = 1;
    if (peek() == '^') {
      get();
      std::string d = digits();
      if (d.size() > 3) fail("malformed exponent");
      power = static_cast<unsigned>(std::stoul(d));
    }
    mono = mono * Monomial::variable(*idx, power);
  }

  std::string s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw DomainError("ring exceeds supported variable count");
}

RingPtr Ring::indexed(std::string_view prefix, std::size_t count, std::size_t start) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(start + i));
  return std::make_shared<const Ring>(std::move(names));
}

RingPtr Ring::make(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  std::vector<Term> t;
  if (c != 0) t.push_back(Term{m, c});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) acc[t.monomial] += t.coefficient;
  return Polynomial(std::move(ring), sorted_from_map(std::move(acc)));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().monomial.degree());
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.monomial[var] != 0) return true;
  return false;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  const Term* best = &terms_.front();
  if (ord == kCanonical) return *best;
  for (const auto& t : terms_)
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_term(ord).coefficient;
  return inv * *this;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coefficient = -term.coefficient;
  return Polynomial(ring_, std::move(t));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial(a.ring_, merge(a.terms_, b.terms_, +1));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  return Polynomial(a.ring_, merge(a.terms_, b.terms_, -1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return b.times(a.terms_[0].monomial, a.terms_[0].coefficient);
  if (b.size() == 1) return a.times(b.terms_[0].monomial, b.terms_[0].coefficient);
  TermMap acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  return Polynomial(a.ring_, sorted_from_map(std::move(acc)));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return Polynomial(a.ring_);
  std::vector<Term> t = a.terms_;
  for (auto& term : t) term.coefficient *= c;
  return Polynomial(a.ring_, std::move(t));
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  // Multiplication by a monomial preserves graded reverse lex order.
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back(Term{term.monomial * m, term.coefficient * c});
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw DomainError("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back(Term{m, t.coefficient * e});
  }
  return from_terms(ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = t.coefficient < 0;
    Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
    std::string mono = monomial_text(t.monomial, *f.ring());
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  return Parser(std::move(compact), ring).run();
}

Polynomial graded_part(const Polynomial& f, unsigned d) {
  std::vector<Term> t;
  for (const auto& term : f.terms())
    if (term.monomial.degree() == d) t.push_back(term);
  return Polynomial::from_terms(f.ring(), std::move(t));
}

Polynomial restrict_to_subspace(const Polynomial& f, std::span<const std::size_t> keep, const RingPtr& target) {
  if (target->size() != keep.size()) throw DomainError("target ring size does not match kept variables");
  std::vector<bool> kept(f.nvars(), false);
  for (auto k : keep) {
    if (k >= f.nvars()) throw DomainError("kept variable out of range");
    kept[k] = true;
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool survives = true;
    for (std::size_t i = 0; i < f.nvars() && survives; ++i)
      if (t.monomial[i] != 0 && !kept[i]) survives = false;
    if (!survives) continue;
    Monomial m;
    for (std::size_t j = 0; j < keep.size(); ++j) m.set(j, t.monomial[keep[j]]);
    out.push_back(Term{m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial restrict_to_subspace(const Polynomial& f, std::span<const std::size_t> keep) {
  std::vector<std::string> names;
  for (auto k : keep) names.push_back(f.ring()->name(k));
  return restrict_to_subspace(f, keep, Ring::make(std::move(names)));
}

Polynomial apply_linear_change(const Polynomial& f, const RationalMatrix& m) {
  const std::size_t n = f.nvars();
  if (m.rows() != n || m.cols() != n) throw DomainError("change matrix has wrong size");
  if (rank(m) != n) throw DomainError("singular matrix");
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) {
      std::vector<Term> lin;
      for (std::size_t j = 0; j < n; ++j)
        if (m(var, j) != 0) lin.push_back(Term{Monomial::variable(j), m(var, j)});
      cache.push_back(Polynomial::constant(f.ring(), 1));
      cache.push_back(Polynomial::from_terms(f.ring(), std::move(lin)));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  TermMap acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(f.ring(), t.coefficient);
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    for (const auto& pt : prod.terms()) acc[pt.monomial] += pt.coefficient;
  }
  return Polynomial::from_terms(f.ring(), [&] {
    std::vector<Term> v;
    for (auto& [mono, c] : acc) v.push_back(Term{mono, c});
    return v;
  }());
}

Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> map) {
  if (map.size() != f.nvars()) throw DomainError("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] >= target->size()) throw DomainError("variable map target out of range");
      m.set(map[i], m[map[i]] + t.monomial[i]);
    }
    out.push_back(Term{m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, std::size_t var, const Polynomial& value) {
  require_same_ring(f, value);
  std::vector<Polynomial> powers{Polynomial::constant(f.ring(), 1)};
  Polynomial out(f.ring());
  std::vector<Term> untouched;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[var];
    if (e == 0) {
      untouched.push_back(t);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.monomial;
    rest.set(var, 0);
    out = out + powers[e].times(rest, t.coefficient);
  }
  return out + Polynomial::from_terms(f.ring(), std::move(untouched));
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) throw DomainError("composition needs one image per variable");
  if (images.empty()) return Polynomial::from_terms(Ring::make({}), f.terms());
  const RingPtr& target = images.front().ring();
  for (const auto& g : images)
    if (!same_ring(g.ring(), target)) throw RingMismatch();
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      prod = prod * cache[e];
    }
    out = out + prod;
  }
  return out;
}

}  // namespace fanoline
