#ifndef FANOLINE_TEST_UTIL_HPP
#define FANOLINE_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "fanoline/groebner.hpp"
#include "fanoline/polynomial.hpp"

namespace fanoline::testing {

inline std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

inline Ideal ideal(const RingPtr& ring, const std::vector<std::string>& texts) {
  return Ideal(ring, polys(ring, texts));
}

/// Random polynomial with small integer coefficients; homogeneous of degree d
/// when homogeneous is set, otherwise of degree at most d.
inline Polynomial random_polynomial(const RingPtr& ring, unsigned d, std::mt19937& rng, int terms = 4,
                                    bool homogeneous = true) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, d);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    unsigned target = homogeneous ? d : deg(rng);
    for (unsigned e = 0; e < target; ++e) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    int c = coeff(rng);
    if (c != 0) out.push_back(Term{m, Rational(c)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace fanoline::testing

#endif
