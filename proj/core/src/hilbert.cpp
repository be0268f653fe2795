#include <algorithm>
#include <sstream>

#include "fanoline/errors.hpp"
#include "fanoline/groebner.hpp"

namespace fanoline {

namespace {

using IntPoly = std::vector<Integer>;  // ascending coefficients in t

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(IntPoly a, const IntPoly& b, unsigned shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

// Numerator of the Hilbert series of S/(gens) over (1-t)^nvars; gens minimal.
IntPoly numerator(std::vector<Monomial> gens, std::size_t nvars) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    IntPoly acc{1};
    for (const auto& g : gens) {
      IntPoly factor(g.degree() + 1);
      factor[0] = 1;
      factor[g.degree()] -= 1;
      IntPoly next(acc.size() + factor.size() - 1);
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
      acc = std::move(next);
    }
    trim(acc);
    return acc;
  }
  // Pivot on the variable that occurs in the most non-pure-power generators.
  std::vector<int> count(nvars, 0);
  for (const auto& g : gens) {
    int support = 0;
    for (std::size_t v = 0; v < nvars; ++v) support += g[v] != 0;
    if (support < 2) continue;
    for (std::size_t v = 0; v < nvars; ++v) count[v] += g[v] != 0;
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  unsigned e = 255;
  for (const auto& g : gens) {
    if (g[var] == 0 || g.degree() == g[var]) continue;
    e = std::min(e, g[var]);
  }
  Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  minimalize(plus);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, g[var] > e ? g[var] - e : 0);
    colon.push_back(q);
  }
  minimalize(colon);
  return add(numerator(std::move(plus), nvars), numerator(std::move(colon), nvars), e);
}

Integer eval_at_one(const IntPoly& p) {
  Integer s = 0;
  for (const auto& c : p) s += c;
  return s;
}

// Quotient of p by (1 - t); requires p(1) = 0.
IntPoly divide_one_minus_t(const IntPoly& p) {
  // p = (1 - t) q  =>  q_k = sum_{i<=k} p_i.
  IntPoly q(p.size() > 0 ? p.size() - 1 : 0);
  Integer run = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    run += p[k];
    q[k] = run;
  }
  trim(q);
  return q;
}

// binom(s - i + D - 1, D - 1) as a polynomial in s.
UniPolynomial shifted_binomial(int i, int D) {
  std::vector<Rational> acc{Rational(1)};
  Rational fact = 1;
  for (int k = 1; k <= D - 1; ++k) {
    // multiply by (s + (k - i))
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * (k - i);
    }
    acc = std::move(next);
    fact *= k;
  }
  for (auto& c : acc) c /= fact;
  return UniPolynomial(std::move(acc));
}

Integer binomial_value(long top, long k) {
  if (k < 0 || top < k) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(top).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

struct Series {
  IntPoly numerator;
  int dimension;
};

Series series_of(const Ideal& ideal, const MonomialOrder& ord) {
  if (!ideal.is_homogeneous()) throw DomainError("Hilbert data needs a homogeneous ideal");
  const std::size_t n = ideal.ring()->size();
  std::vector<Monomial> lead;
  for (const auto& g : ideal.groebner_basis(ord)) lead.push_back(g.leading_term(ord).monomial);
  minimalize(lead);
  IntPoly num = numerator(std::move(lead), n);
  int dim = static_cast<int>(n);
  if (num.empty()) return {num, -1};
  while (dim > 0 && eval_at_one(num) == 0) {
    num = divide_one_minus_t(num);
    --dim;
  }
  return {num, dim};
}

}  // namespace

UniPolynomial::UniPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const UniPolynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << to_string(c);
      continue;
    }
    if (c != 1) out << to_string(c) << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

HilbertData hilbert_data(const Ideal& ideal, const MonomialOrder& ord) {
  Series s = series_of(ideal, ord);
  HilbertData h;
  if (s.dimension < 0) {
    h.unit = true;
    return h;
  }
  h.dimension = s.dimension;
  h.proj_dimension = s.dimension - 1;
  h.numerator = s.numerator;
  const int num_degree = static_cast<int>(s.numerator.size()) - 1;
  h.regularity_index = std::max(0, num_degree - s.dimension + 1);
  if (s.dimension == 0) return h;
  h.degree = eval_at_one(s.numerator);
  std::vector<Rational> hp;
  for (int i = 0; i <= num_degree; ++i) {
    UniPolynomial b = shifted_binomial(i, s.dimension);
    if (hp.size() < b.coefficients().size()) hp.resize(b.coefficients().size());
    for (std::size_t j = 0; j < b.coefficients().size(); ++j)
      hp[j] += Rational(s.numerator[static_cast<std::size_t>(i)]) * b.coefficients()[j];
  }
  h.hilbert_polynomial = UniPolynomial(std::move(hp));
  return h;
}

Integer hilbert_function(const Ideal& ideal, unsigned d, const MonomialOrder& ord) {
  Series s = series_of(ideal, ord);
  if (s.dimension < 0) return 0;
  Integer total = 0;
  for (std::size_t i = 0; i < s.numerator.size() && i <= d; ++i) {
    const long rest = static_cast<long>(d) - static_cast<long>(i);
    Integer ways = s.dimension == 0 ? Integer(rest == 0 ? 1 : 0) : binomial_value(rest + s.dimension - 1, s.dimension - 1);
    total += s.numerator[i] * ways;
  }
  return total;
}

}  // namespace fanoline
