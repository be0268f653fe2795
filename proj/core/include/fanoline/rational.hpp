#ifndef FANOLINE_RATIONAL_HPP
#define FANOLINE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fanoline {

// GMP keeps every mpq_class canonical (reduced, positive denominator, 0 = 0/1)
// as long as values are built through the arithmetic operators or canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a" or "a/b" with an optional sign. Throws InputError on zero
/// denominators and malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace fanoline

#endif  // FANOLINE_RATIONAL_HPP
