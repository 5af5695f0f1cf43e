#include "logint/bernoulli.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "oracles.hpp"

using namespace logint;

TEST(Binomial, KnownValues) {
  EXPECT_EQ(binomial(4, 2), Integer(6));
  EXPECT_EQ(binomial(7, 0), Integer(1));
  EXPECT_EQ(binomial(0, 0), Integer(1));
  EXPECT_EQ(binomial(52, 26), Integer("495918532948104"));
  EXPECT_THROW(binomial(3, 4), std::invalid_argument);
}

TEST(Binomial, MatchesPascalRecurrence) {
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned k = 0; k <= n; ++k)
      EXPECT_EQ(binomial(n, k), oracles::pascal_binomial(n, k))
          << "n=" << n << " k=" << k;
}

TEST(BernoulliNumber, KnownValues) {
  EXPECT_EQ(bernoulli_number(0), Rational(1));
  EXPECT_EQ(bernoulli_number(1), make_rational(-1, 2));
  EXPECT_EQ(bernoulli_number(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli_number(4), make_rational(-1, 30));
  EXPECT_EQ(bernoulli_number(5), Rational(0));
  EXPECT_EQ(bernoulli_number(12), make_rational(-691, 2730));
}

TEST(BernoulliNumber, OddValuesVanish) {
  for (unsigned m = 3; m <= 41; m += 2) EXPECT_EQ(bernoulli_number(m), Rational(0));
}

TEST(BernoulliNumber, MatchesDoubleSumOracle) {
  for (unsigned m = 0; m <= 40; ++m)
    EXPECT_EQ(bernoulli_number(m), oracles::worpitzky_bernoulli(m)) << "m=" << m;
}

TEST(BernoulliNumber, AlternatingSignOfEvenValues) {
  // (-1)^{j-1} B_{2j} > 0 for j >= 1
  for (unsigned j = 1; j <= 30; ++j) {
    const Rational v = bernoulli_number(2 * j);
    EXPECT_TRUE((j % 2 == 1) ? v > 0 : v < 0) << "j=" << j;
  }
}

TEST(BernoulliPolynomial, KnownCoefficients) {
  EXPECT_EQ(bernoulli_polynomial(0), std::vector<Rational>{Rational(1)});
  EXPECT_EQ(bernoulli_polynomial(1),
            (std::vector<Rational>{make_rational(-1, 2), Rational(1)}));
  EXPECT_EQ(bernoulli_polynomial(2),
            (std::vector<Rational>{make_rational(1, 6), Rational(-1), Rational(1)}));
}

TEST(BernoulliPolynomial, AdditionTheorem) {
  // B_n(x+y) = sum_j C(n,j) B_j(x) y^{n-j}, exactly.
  std::mt19937 rng(20240811);
  for (int i = 0; i < 100; ++i) {
    const Rational x = oracles::random_rational(rng);
    const Rational y = oracles::random_rational(rng);
    for (unsigned n = 0; n <= 12; ++n) {
      const Rational lhs = evaluate_poly(bernoulli_polynomial(n), x + y);
      Rational rhs(0);
      for (unsigned j = 0; j <= n; ++j)
        rhs += Rational(binomial(n, j)) *
               evaluate_poly(bernoulli_polynomial(j), x) *
               pow_rational(y, n - j);
      EXPECT_EQ(lhs, rhs) << "n=" << n;
    }
  }
}

TEST(BernoulliPolynomial, Reflection) {
  // B_n(1/2 - x) = (-1)^n B_n(1/2 + x), exactly.
  std::mt19937 rng(4242);
  const Rational half = make_rational(1, 2);
  for (int i = 0; i < 100; ++i) {
    const Rational x = oracles::random_rational(rng);
    for (unsigned n = 0; n <= 12; ++n) {
      const auto poly = bernoulli_polynomial(n);
      const Rational lhs = evaluate_poly(poly, half - x);
      Rational rhs = evaluate_poly(poly, half + x);
      if (n % 2 == 1) rhs = -rhs;
      EXPECT_EQ(lhs, rhs) << "n=" << n;
    }
  }
}

TEST(BernoulliPolynomial, DifferenceEquation) {
  // B_n(x+1) - B_n(x) = n x^{n-1}, exactly.
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Rational x = oracles::random_rational(rng);
    for (unsigned n = 1; n <= 12; ++n) {
      const auto poly = bernoulli_polynomial(n);
      const Rational diff =
          evaluate_poly(poly, x + 1) - evaluate_poly(poly, x);
      EXPECT_EQ(diff, Rational(n) * pow_rational(x, n - 1)) << "n=" << n;
    }
  }
}

TEST(BernoulliAtHalf, KnownValues) {
  EXPECT_EQ(bernoulli_at_half(0), Rational(1));
  EXPECT_EQ(bernoulli_at_half(2), make_rational(-1, 12));
  EXPECT_EQ(bernoulli_at_half(3), Rational(0));
}

TEST(BernoulliAtHalf, MatchesPolynomialEvaluation) {
  const Rational half = make_rational(1, 2);
  for (unsigned n = 0; n <= 30; ++n)
    EXPECT_EQ(bernoulli_at_half(n), evaluate_poly(bernoulli_polynomial(n), half))
        << "n=" << n;
}

TEST(BernoulliCacheTest, ConcurrentReadsAreConsistent) {
  std::vector<Rational> expected;
  for (unsigned m = 0; m <= 120; ++m) expected.push_back(bernoulli_number(m));
  std::vector<std::thread> workers;
  std::vector<int> failures(8, 0);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      for (unsigned m = 0; m <= 120; ++m)
        if (bernoulli_number(m) != expected[m]) ++failures[w];
    });
  }
  for (auto& t : workers) t.join();
  for (int w = 0; w < 8; ++w) EXPECT_EQ(failures[w], 0);
}

TEST(BernoulliCacheTest, PerInstanceCache) {
  BernoulliCache cache;
  EXPECT_EQ(cache.number(16), make_rational(-3617, 510));
  EXPECT_EQ(cache.number(2), make_rational(1, 6));
}
