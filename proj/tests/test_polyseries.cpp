#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "kmp/catalog.hpp"
#include "kmp/error.hpp"
#include "kmp/polyseries.hpp"
#include "kmp/reference.hpp"

using namespace kmp;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit) {
  std::uniform_int_distribution<int> c(-20, 20);
  std::vector<Coeff> v(static_cast<std::size_t>(order) + 1);
  for (auto& x : v) x = c(rng);
  if (unit) v[0] = (rng() & 1U) ? 1 : -1;
  return TruncatedSeries(v);
}

IntPolynomial random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> c(-6, 6);
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1);
  for (auto& x : v) x = c(rng);
  return IntPolynomial(v);
}

}  // namespace

TEST(IntPolynomial, Basics) {
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_EQ((IntPolynomial{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ((IntPolynomial{1, 1} * IntPolynomial{1, -1}), (IntPolynomial{1, 0, -1}));
  EXPECT_EQ((IntPolynomial{1, 1} - IntPolynomial{1, 1}), IntPolynomial{});
  EXPECT_EQ(q_integer(3), (IntPolynomial{1, 1, 1}));
  EXPECT_TRUE((IntPolynomial{1, 2, 1}).is_palindromic());
  EXPECT_FALSE((IntPolynomial{1, 2}).is_palindromic());
  EXPECT_EQ((IntPolynomial{1, 2, 3}).eval(2), 17);
  EXPECT_EQ(to_string(IntPolynomial{1, 0, -1}), "1 - t^2");
}

TEST(Mul, Examples) {
  const auto p = mul(IntPolynomial{1, 1}, IntPolynomial{1, -1}, 2);
  EXPECT_EQ(p.coeffs(), (std::vector<Coeff>{1, 0, -1}));

  const TruncatedSeries h(std::vector<Coeff>(reference::kHyperbolicGrowth.begin(), reference::kHyperbolicGrowth.end()));
  const auto q = mul(h, reference::b5_quotient_denominator(), 25);
  EXPECT_EQ(q.order(), 25);
  EXPECT_EQ(q.to_polynomial(), finite_poincare(FiniteType::parse("B5")));
}

TEST(Mul, A4TimesR1) {
  const auto r1 = mul(reference::a4_coset_numerator(), inverse(reference::coset_denominator(), 6), 6);
  const auto w = mul(reference::a4_poincare(), r1, 6);
  EXPECT_EQ(w.coeffs(), (std::vector<Coeff>{1, 6, 20, 52, 117, 237, 445}));
}

TEST(Mul, OrderIsMinimumOfOperands) {
  const TruncatedSeries a(std::vector<Coeff>{1, 1, 1});
  const TruncatedSeries b(std::vector<Coeff>{1, 1, 1, 1, 1});
  EXPECT_EQ(mul(a, b, 10).order(), 2);
  EXPECT_EQ(mul(IntPolynomial{1, 1}, b, 10).order(), 4);
}

TEST(Mul, RandomizedAlgebraLaws) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = static_cast<int>(rng() % 12);
    const auto a = random_series(rng, order, false);
    const auto b = random_series(rng, order, false);
    const auto c = random_series(rng, order, false);
    EXPECT_EQ(mul(a, b, order), mul(b, a, order));
    EXPECT_EQ(mul(mul(a, b, order), c, order), mul(a, mul(b, c, order), order));
  }
}

TEST(Mul, AgreesWithPolynomialProduct) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, static_cast<int>(rng() % 8));
    const auto q = random_poly(rng, static_cast<int>(rng() % 8));
    const int order = 16;
    EXPECT_EQ(mul(p, q, order), TruncatedSeries::from_polynomial(p * q, order));
  }
}

TEST(Inverse, Examples) {
  const auto g = inverse(IntPolynomial{1, -1}, 5);
  EXPECT_EQ(g.coeffs(), (std::vector<Coeff>{1, 1, 1, 1, 1, 1}));
  const auto back = mul(inverse(reference::a4_poincare(), 10), reference::a4_poincare(), 10);
  EXPECT_EQ(back, TruncatedSeries::from_polynomial(IntPolynomial{1}, 10));

  const TruncatedSeries h(std::vector<Coeff>(reference::kHyperbolicGrowth.begin(), reference::kHyperbolicGrowth.end()));
  const auto q = mul(inverse(h, 24), finite_poincare(FiniteType::parse("B5")), 24);
  EXPECT_EQ(q.to_polynomial(), reference::b5_quotient_denominator());
}

TEST(Inverse, NegativeUnitAndErrors) {
  const auto g = inverse(IntPolynomial{-1, 1}, 3);
  EXPECT_EQ(g.coeffs(), (std::vector<Coeff>{-1, -1, -1, -1}));
  EXPECT_THROW(inverse(IntPolynomial{2, 1}, 3), Error);
  EXPECT_THROW(inverse(IntPolynomial{0, 1}, 3), Error);
}

TEST(Inverse, InvolutionOnUnits) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = static_cast<int>(rng() % 10);
    const auto a = random_series(rng, order, true);
    EXPECT_EQ(inverse(inverse(a, order), order), a);
    EXPECT_EQ(mul(a, inverse(a, order), order), TruncatedSeries::from_polynomial(IntPolynomial{1}, order));
  }
}

TEST(DivideExact, Examples) {
  EXPECT_EQ(divide_exact(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}), (IntPolynomial{1, 1}));
  EXPECT_THROW(divide_exact(IntPolynomial{-1, 0, 0, 0, 1}, IntPolynomial{1, -2, 1}), Error);
  EXPECT_THROW(divide_exact(IntPolynomial{1, 1}, IntPolynomial{}), Error);

  IntPolynomial prod{1};
  IntPolynomial lin{1};
  for (int nu : {2, 4, 6, 8, 10}) {
    prod = prod * (IntPolynomial::monomial(1, nu) - IntPolynomial{1});
    lin = lin * IntPolynomial{-1, 1};
  }
  EXPECT_EQ(divide_exact(prod, lin), finite_poincare(FiniteType::parse("B5")));
}

TEST(DivideExact, RoundTrip) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, static_cast<int>(rng() % 7));
    auto d = random_poly(rng, static_cast<int>(rng() % 5));
    if (d.is_zero()) d = IntPolynomial{1};
    EXPECT_EQ(divide_exact(p * d, d), p);
  }
}

TEST(Overflow, Throws) {
  constexpr Coeff big = std::numeric_limits<Coeff>::max();
  EXPECT_THROW(checked_add(big, 1), Error);
  EXPECT_THROW(checked_mul(big, 2), Error);
  EXPECT_THROW(checked_sub(std::numeric_limits<Coeff>::min(), 1), Error);
  EXPECT_THROW((IntPolynomial{big} * IntPolynomial{2}), Error);
  EXPECT_THROW(mul(TruncatedSeries(std::vector<Coeff>{1, big}), IntPolynomial{1, 1}, 1), Error);
}

TEST(ConvolutionCheck, Examples) {
  const TruncatedSeries h(std::vector<Coeff>(reference::kHyperbolicGrowth.begin(), reference::kHyperbolicGrowth.end()));
  const auto r1 = mul(reference::a4_coset_numerator(), inverse(reference::coset_denominator(), 6), 6);
  const auto rep = convolution_check(h, reference::a4_poincare(), r1);
  EXPECT_EQ(rep.order, 6);
  EXPECT_TRUE(rep.passed());

  const TruncatedSeries u(std::vector<Coeff>{1, 3, -2, 5});
  EXPECT_TRUE(convolution_check(u, u, TruncatedSeries(std::vector<Coeff>{1, 0, 0, 0})).passed());

  auto w = h.truncate(6);
  w.coeff(4) += 1;
  const auto bad = convolution_check(w, reference::a4_poincare(), r1);
  ASSERT_TRUE(bad.first_failure);
  EXPECT_EQ(*bad.first_failure, 4);
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(bad.per_order[static_cast<std::size_t>(m)], m != 4);
}
