#include <gtest/gtest.h>

#include <random>

#include "fanoline/errors.hpp"
#include "fanoline/polynomial.hpp"
#include "test_util.hpp"

namespace fanoline {
namespace {

using testing::random_polynomial;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-0/5"), Rational(0));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("1/"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}

TEST(MonomialOrder, GrevlexBreaksTiesFromTheLastVariable) {
  Monomial a, b;
  a.set(0, 1);
  a.set(2, 1);  // x0*x2
  b.set(1, 2);  // x1^2
  EXPECT_TRUE(MonomialOrder::grevlex().greater(b, a));
  EXPECT_TRUE(MonomialOrder::lex().greater(a, b));
  EXPECT_TRUE(MonomialOrder::grlex().greater(a, b));
}

TEST(MonomialOrder, BlockOrderEliminatesFirstBlock) {
  Monomial with_t = Monomial::variable(0);
  Monomial big;
  big.set(1, 5);
  EXPECT_TRUE(MonomialOrder::block_elimination(1).greater(with_t, big));
}

TEST(MonomialOrder, OrdersAreMultiplicative) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> e(0, 3);
  const MonomialOrder orders[] = {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(),
                                  MonomialOrder::block_elimination(2), MonomialOrder::homogenized_local()};
  for (int trial = 0; trial < 300; ++trial) {
    Monomial a, b, c;
    for (std::size_t i = 0; i < 5; ++i) {
      a.set(i, e(rng));
      b.set(i, e(rng));
      c.set(i, e(rng));
    }
    for (const auto& ord : orders) {
      int before = ord.compare(a, b);
      EXPECT_EQ(before, ord.compare(a * c, b * c)) << ord.name();
      EXPECT_EQ(before, -ord.compare(b, a));
      if (a == b) EXPECT_EQ(before, 0);
    }
  }
}

TEST(Polynomial, ParseExamples) {
  auto x = Ring::indexed("x", 4);
  auto f = parse_polynomial("x0*x3 - x1*x2", x);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(parse_polynomial("0", x).is_zero());
  auto y = Ring::indexed("y", 1, 1);
  EXPECT_EQ(to_string(parse_polynomial("1/2*y1^2 + 1/2*y1^2", y)), "y1^2");
}

TEST(Polynomial, ParseErrors) {
  auto x = Ring::indexed("x", 2);
  EXPECT_THROW(parse_polynomial("x7", x), InputError);
  EXPECT_THROW(parse_polynomial("x0^", x), InputError);
  EXPECT_THROW(parse_polynomial("x0^-1", x), InputError);
  EXPECT_THROW(parse_polynomial("1/0*x0", x), InputError);
  EXPECT_THROW(parse_polynomial("x0 +", x), InputError);
}

TEST(Polynomial, PrintParseRoundTrip) {
  auto ring = Ring::indexed("x", 4);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = random_polynomial(ring, 3, rng, 6, trial % 2 == 0);
    f = f * Polynomial::constant(ring, Rational(1, 1 + trial % 5));
    std::string text = to_string(f);
    Polynomial g = parse_polynomial(text, ring);
    EXPECT_EQ(f, g) << text;
    EXPECT_EQ(text, to_string(g));
  }
}

TEST(Polynomial, RingAxioms) {
  auto ring = Ring::indexed("x", 3);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_polynomial(ring, 2, rng, 4, false);
    auto b = random_polynomial(ring, 2, rng, 4, false);
    auto c = random_polynomial(ring, 1, rng, 3, false);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Polynomial, EvaluationIsAHomomorphism) {
  auto ring = Ring::indexed("x", 3);
  std::mt19937 rng(5);
  std::vector<Rational> pt{Rational(2, 3), Rational(-1), Rational(5, 7)};
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_polynomial(ring, 3, rng, 5, false);
    auto b = random_polynomial(ring, 2, rng, 5, false);
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST(Polynomial, GradedPartsReconstruct) {
  auto y = Ring::make({"y1", "y2", "y3"});
  auto f = parse_polynomial("y3 + y1*y2", y);
  EXPECT_EQ(to_string(graded_part(f, 2)), "y1*y2");
  EXPECT_EQ(to_string(graded_part(f, 1)), "y3");
  EXPECT_TRUE(graded_part(f, 3).is_zero());
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_polynomial(y, 4, rng, 8, false);
    Polynomial sum(y);
    for (unsigned d = 0; d <= 4; ++d) sum = sum + graded_part(g, d);
    EXPECT_EQ(sum, g);
  }
}

TEST(Polynomial, RestrictToSubspace) {
  auto y = Ring::make({"y1", "y2", "y3"});
  const std::size_t keep[] = {0, 1};
  EXPECT_EQ(to_string(restrict_to_subspace(parse_polynomial("y1*y2 + y3^2", y), keep)), "y1*y2");
  EXPECT_TRUE(restrict_to_subspace(parse_polynomial("y3", y), keep).is_zero());
  auto g = restrict_to_subspace(parse_polynomial("y1^2 - 3*y2", y), keep);
  EXPECT_EQ(g.ring()->names(), (std::vector<std::string>{"y1", "y2"}));
  EXPECT_EQ(to_string(g), "y1^2 - 3*y2");
}

TEST(Polynomial, LinearChangeRoundTripAndDegree) {
  auto ring = Ring::indexed("x", 3);
  auto m = RationalMatrix::from_rows({{1, 2, 0}, {0, 1, -1}, {Rational(1, 2), 0, 2}});
  auto inv = inverse(m);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_polynomial(ring, 3, rng, 5, true);
    if (f.is_zero()) continue;
    auto g = apply_linear_change(f, m);
    EXPECT_EQ(g.total_degree(), f.total_degree());
    EXPECT_TRUE(g.is_homogeneous());
    EXPECT_EQ(apply_linear_change(g, inv), f);
  }
  auto singular = RationalMatrix::from_rows({{1, 2, 0}, {2, 4, 0}, {0, 0, 1}});
  EXPECT_THROW(apply_linear_change(parse_polynomial("x0", ring), singular), DomainError);
}

TEST(Polynomial, LinearChangeMatchesEvaluation) {
  auto ring = Ring::indexed("x", 3);
  auto m = RationalMatrix::from_rows({{1, 1, 0}, {0, 3, -1}, {2, 0, 1}});
  auto f = parse_polynomial("x0^2*x1 - 5*x2^3 + x0*x1*x2", ring);
  std::vector<Rational> z{Rational(1, 2), Rational(2), Rational(-3)};
  RationalVector x = m.apply(z);
  EXPECT_EQ(apply_linear_change(f, m).evaluate(z), f.evaluate(x));
}

TEST(Polynomial, DerivativeProductRule) {
  auto ring = Ring::indexed("x", 2);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_polynomial(ring, 3, rng, 4, false);
    auto b = random_polynomial(ring, 2, rng, 4, false);
    EXPECT_EQ((a * b).derivative(0), a.derivative(0) * b + a * b.derivative(0));
  }
}

TEST(Polynomial, RingMismatchIsRejected) {
  auto a = Polynomial::variable(Ring::indexed("x", 2), 0);
  auto b = Polynomial::variable(Ring::indexed("y", 2), 0);
  EXPECT_THROW(a + b, RingMismatch);
}

TEST(Matrix, KernelAndInverse) {
  auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  auto k = kernel(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    auto r = m.apply(v);
    EXPECT_EQ(r[0], 0);
    EXPECT_EQ(r[1], 0);
  }
  auto a = RationalMatrix::from_rows({{2, 1}, {1, 1}});
  EXPECT_EQ(a * inverse(a), RationalMatrix::identity(2));
  EXPECT_THROW(inverse(m), DomainError);
}

}  // namespace
}  // namespace fanoline
