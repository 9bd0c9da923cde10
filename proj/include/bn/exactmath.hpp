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

#pragma once

// Exact integer, rational and dense univariate polynomial arithmetic.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bn/errors.hpp"

namespace bn {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// Zero when k > n.
inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Dense univariate polynomial over the rationals. Coefficient i multiplies
/// the i-th power of the variable; trailing zeros are never stored, so the
/// zero polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  static Polynomial monomial(std::size_t exponent, const Rational& c = 1) {
    std::vector<Rational> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return Polynomial(std::move(coeffs));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational operator[](std::size_t i) const { return coefficient(i); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // p(t) -> p(t^power)
  Polynomial substitute_power(std::size_t power) const {
    if (is_zero() || power == 1) return *this;
    if (power == 0) return constant(evaluate(1));
    std::vector<Rational> out(coeffs_.size() * power - power + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * power] = coeffs_[i];
    return Polynomial(std::move(out));
  }

  // Drops every power above max_degree.
  Polynomial truncated(std::size_t max_degree) const {
    if (coeffs_.size() <= max_degree + 1) return *this;
    return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Long division; returns {quotient, remainder} with deg(remainder) < deg(divisor).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw invalid_argument("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs_;
    const std::size_t dn = den.coeffs_.size();
    if (rem.size() < dn) return {Polynomial{}, num};
    std::vector<Rational> quot(rem.size() - dn + 1);
    const Rational& lead = den.coeffs_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
      Rational c = rem[i + dn - 1] / lead;
      if (c == 0) continue;
      quot[i] = c;
      for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= c * den.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  // Throws unless den divides num.
  friend Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw invalid_argument("polynomial division is not exact");
    return q;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      const Rational& c = p.coeffs_[i];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      Rational mag = abs(c);
      if (i == 0 || mag != 1) os << mag;
      if (i > 0) {
        if (mag != 1) os << "*";
        os << "t";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial out = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return out;
}

/// Gaussian binomial [n choose k]_q via the product formula
/// prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i). Every partial product is itself
/// a Gaussian binomial, so each division is exact.
inline Polynomial gaussian_binomial(unsigned n, unsigned k) {
  if (k > n) throw invalid_argument("gaussian_binomial: k > n");
  k = std::min(k, n - k);
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 1; i <= k; ++i) {
    out *= Polynomial::constant(1) - Polynomial::monomial(n - k + i);
    out = divide_exact(out, Polynomial::constant(1) - Polynomial::monomial(i));
  }
  return out;
}

}  // namespace bn
