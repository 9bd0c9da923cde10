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

// Poincare polynomials of the spaces the Brill-Noether computation is built
// from: the Picard torus, Grassmannians, Grassmann bundles over the torus, and
// symmetric products of a curve (used as an independent oracle for r = 0).

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "bn/errors.hpp"
#include "bn/exactmath.hpp"

namespace bn {

/// Betti numbers b_0..b_{2 dim} of a compact space of complex dimension dim.
class BettiTable {
 public:
  BettiTable() : betti_{1} {}  // a point
  explicit BettiTable(std::vector<Integer> betti) : betti_(std::move(betti)) { validate(); }
  BettiTable(std::initializer_list<long> betti) : betti_(betti.begin(), betti.end()) { validate(); }

  // Reads the coefficients of t^0..t^{2 dim}; higher powers must vanish.
  static BettiTable from_polynomial(const Polynomial& p, std::size_t dim) {
    if (p.degree() > static_cast<long>(2 * dim))
      throw invalid_argument("Poincare polynomial exceeds twice the dimension");
    std::vector<Integer> betti(2 * dim + 1);
    for (std::size_t i = 0; i < betti.size(); ++i) {
      Rational c = p.coefficient(i);
      if (!is_integral(c)) throw invalid_argument("Poincare polynomial has non-integral coefficients");
      betti[i] = c.get_num();
    }
    return BettiTable(std::move(betti));
  }

  std::size_t dim() const { return (betti_.size() - 1) / 2; }
  std::size_t size() const { return betti_.size(); }
  const Integer& operator[](std::size_t i) const { return betti_.at(i); }
  const std::vector<Integer>& entries() const { return betti_; }

  bool is_palindromic() const {
    for (std::size_t i = 0; i < betti_.size(); ++i)
      if (betti_[i] != betti_[betti_.size() - 1 - i]) return false;
    return true;
  }

  Polynomial poincare_polynomial() const {
    std::vector<Rational> c;
    c.reserve(betti_.size());
    for (const auto& b : betti_) c.emplace_back(b);
    return Polynomial(std::move(c));
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BettiTable& t) {
    os << "[";
    for (std::size_t i = 0; i < t.betti_.size(); ++i) os << (i ? "," : "") << t.betti_[i];
    return os << "]";
  }

 private:
  void validate() const {
    if (betti_.size() % 2 == 0) throw invalid_argument("BettiTable length must be odd (2*dim+1)");
    for (const auto& b : betti_)
      if (b < 0) throw invalid_argument("BettiTable entries must be nonnegative");
  }

  std::vector<Integer> betti_;
};

// (1+t)^{2g}
inline Polynomial poincare_torus(unsigned g) {
  return pow(Polynomial{1, 1}, 2 * g);
}

// Gr(k, n) has only even cohomology: its q-binomial with q = t^2.
inline Polynomial poincare_grassmannian(unsigned k, unsigned n) {
  if (k > n) throw invalid_argument("poincare_grassmannian: k > n");
  return gaussian_binomial(n, k).substitute_power(2);
}

/// Leray-Hirsch: Gr(k, E) over a g-dimensional torus, E of rank n.
inline Polynomial poincare_grassmann_bundle(unsigned g, unsigned k, unsigned n) {
  return poincare_torus(g) * poincare_grassmannian(k, n);
}

/// Betti numbers of Sym^d(C) for a genus-g curve: the coefficient of x^d in
/// (1+xt)^{2g} / ((1-x)(1-xt^2)), expanded as a series in x with polynomial
/// coefficients in t and truncated at x^d.
inline BettiTable macdonald_symmetric_product(unsigned g, unsigned d) {
  if (g < 1 || d < 1 || d + 1 > g)
    throw invalid_argument("macdonald_symmetric_product requires g >= 1 and 1 <= d <= g-1");
  using Series = std::vector<Polynomial>;  // index = power of x
  auto mul = [d](const Series& a, const Series& b) {
    Series out(d + 1);
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; i + j <= d; ++j) out[i + j] += a[i] * b[j];
    return out;
  };

  Series numerator(d + 1), geometric(d + 1), geometric_t2(d + 1);
  for (unsigned a = 0; a <= d; ++a) {
    numerator[a] = Polynomial::monomial(a, Rational(binomial(2 * g, a)));
    geometric[a] = Polynomial::constant(1);
    geometric_t2[a] = Polynomial::monomial(2 * a);
  }
  Series series = mul(mul(numerator, geometric), geometric_t2);
  return BettiTable::from_polynomial(series[d], d);
}

inline Integer euler_characteristic_of(const BettiTable& table) {
  Integer chi = 0;
  for (std::size_t i = 0; i < table.size(); ++i) chi += (i % 2 ? -1 : 1) * table[i];
  return chi;
}

}  // namespace bn
