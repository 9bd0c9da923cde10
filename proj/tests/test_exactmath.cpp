/*
 * Copyright 2026 The bn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "bn/exactmath.hpp"
#include "oracles.hpp"

using bn::Polynomial;
using bn::Rational;

namespace {

Polynomial from_counts(const std::vector<long>& counts) {
  std::vector<Rational> c;
  for (long v : counts) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial random_poly() {
  std::vector<Rational> c(bn_test::uniform(0, 5));
  for (auto& x : c) x = bn::make_rational(bn_test::uniform(-9, 9), bn_test::uniform(1, 4));
  return Polynomial(std::move(c));
}

}  // namespace

TEST(Polynomial, TrimsTrailingZeros) {
  Polynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coefficients().size(), 2u);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial{}.degree(), -1);
}

TEST(Polynomial, MultiplyExamples) {
  EXPECT_EQ(Polynomial({1, 1}) * Polynomial({1, 1}), Polynomial({1, 2, 1}));
  Polynomial p{3, Rational(1, 2), -7};
  EXPECT_EQ(p * Polynomial::constant(1), p);
  EXPECT_TRUE((p * Polynomial{}).is_zero());

  Polynomial prod = bn::pow(Polynomial{1, 1}, 8) * Polynomial{1, 0, 1, 0, 1, 0, 1};
  EXPECT_EQ(prod.coefficient(3), Rational(bn_test::choose(8, 3) + bn_test::choose(8, 1)));
  EXPECT_EQ(prod.coefficient(3), 64);
  EXPECT_EQ(prod.degree(), 14);
}

TEST(Polynomial, RingLaws) {
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(Polynomial, Division) {
  Polynomial a{1, 2, 3}, b{-1, 0, 5, 1};
  EXPECT_EQ(divide_exact(a * b, b), a);
  auto [q, r] = divmod(a * b + Polynomial{4}, b);
  EXPECT_EQ(q, a);
  EXPECT_EQ(r, Polynomial{4});
  EXPECT_THROW(divide_exact(a * b + Polynomial{4}, b), bn::invalid_argument);
  EXPECT_THROW(divmod(a, Polynomial{}), bn::invalid_argument);
}

TEST(Polynomial, SubstituteAndEvaluate) {
  Polynomial p{1, 2, 3};
  EXPECT_EQ(p.substitute_power(2), Polynomial({1, 0, 2, 0, 3}));
  EXPECT_EQ(p.evaluate(2), 17);
  EXPECT_EQ(p.evaluate(-1), 2);
  EXPECT_EQ(p.truncated(1), Polynomial({1, 2}));
}

TEST(Factorial, Values) {
  EXPECT_EQ(bn::factorial(0), 1);
  EXPECT_EQ(bn::factorial(4), 24);
  EXPECT_EQ(bn::factorial(25), bn_test::fact(25));
  EXPECT_EQ(bn::binomial(8, 3), 56);
  EXPECT_EQ(bn::binomial(6, 3), 20);
  EXPECT_EQ(bn::binomial(3, 5), 0);
  EXPECT_EQ(bn::binomial(0, 0), 1);
}

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(bn::gaussian_binomial(2, 1), Polynomial({1, 1}));
  EXPECT_EQ(bn::gaussian_binomial(4, 2), from_counts(bn_test::box_partition_counts(2, 2)));
  EXPECT_EQ(bn::gaussian_binomial(4, 2), Polynomial({1, 1, 2, 1, 1}));
  EXPECT_EQ(bn::gaussian_binomial(4, 1), from_counts(bn_test::box_partition_counts(1, 3)));
  EXPECT_EQ(bn::gaussian_binomial(4, 1), Polynomial({1, 1, 1, 1}));
  EXPECT_EQ(bn::gaussian_binomial(5, 0), Polynomial::constant(1));
  EXPECT_EQ(bn::gaussian_binomial(0, 0), Polynomial::constant(1));
  EXPECT_THROW(bn::gaussian_binomial(3, 4), bn::invalid_argument);
}

TEST(GaussianBinomial, MatchesBoxEnumeration) {
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned k = 0; k <= n; ++k)
      EXPECT_EQ(bn::gaussian_binomial(n, k), from_counts(bn_test::box_partition_counts(k, n - k))) << n << "," << k;
}

TEST(GaussianBinomial, Properties) {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      Polynomial p = bn::gaussian_binomial(n, k);
      EXPECT_EQ(p.evaluate(1), Rational(bn::binomial(n, k)));
      EXPECT_EQ(p.degree(), static_cast<long>(k * (n - k)));
      EXPECT_EQ(p, bn::gaussian_binomial(n, n - k));
      const std::size_t top = k * (n - k);
      for (std::size_t j = 0; j <= top; ++j) {
        EXPECT_EQ(p.coefficient(j), p.coefficient(top - j));
        EXPECT_TRUE(bn::is_integral(p.coefficient(j)));
        EXPECT_GE(p.coefficient(j), 0);
      }
    }
}
