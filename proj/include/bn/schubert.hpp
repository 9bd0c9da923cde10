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

// Intersection theory on the Grassmann bundle Gr(k, E) -> Pic^d(C).
//
// Classes live in Q[x_1..x_k, theta] truncated at a total weight N and at
// theta^{g+1} = 0, where x_i are the Chern roots of S^dual (S the tautological
// rank-k subbundle) and theta is the polarization of the Picard torus. Only
// theta-powers of H*(Pic) are tracked; that is enough to integrate.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bn/errors.hpp"
#include "bn/exactmath.hpp"
#include "bn/parameters.hpp"

namespace bn {

/// Weakly decreasing sequence of nonnegative integers; trailing zeros are
/// dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
      throw invalid_argument("partition parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  // rows copies of cols
  static Partition box(unsigned rows, unsigned cols) { return Partition(std::vector<unsigned>(rows, cols)); }

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
  unsigned operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << "(";
    for (std::size_t i = 0; i < p.parts_.size(); ++i) os << (i ? "," : "") << p.parts_[i];
    return os << ")";
  }

 private:
  std::vector<unsigned> parts_;
};

inline constexpr unsigned kMaxRoots = 7;
inline constexpr unsigned kMaxWeight = 255;

struct ClassContext {
  unsigned genus = 0;       // theta^{genus+1} = 0
  unsigned roots = 0;       // number of Chern roots x_1..x_k
  unsigned truncation = 0;  // total weights above this are dropped

  friend bool operator==(const ClassContext&, const ClassContext&) = default;
};

/// x_1^{a_1} ... x_k^{a_k} theta^m packed one byte per exponent.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial make(std::span<const unsigned> x, unsigned theta = 0) {
    if (x.size() > kMaxRoots) throw invalid_argument("too many Chern roots");
    Monomial m;
    for (std::size_t i = 0; i < x.size(); ++i) m = m.with_x(i, x[i]);
    return m.with_theta(theta);
  }

  unsigned x(std::size_t i) const { return byte(i); }
  unsigned theta() const { return byte(kMaxRoots); }

  unsigned x_weight() const {
    unsigned w = 0;
    for (std::size_t i = 0; i < kMaxRoots; ++i) w += byte(i);
    return w;
  }
  unsigned weight() const { return x_weight() + theta(); }

  Monomial with_x(std::size_t i, unsigned v) const { return with_byte(i, v); }
  Monomial with_theta(unsigned v) const { return with_byte(kMaxRoots, v); }

  // Exponents never exceed kMaxWeight inside a truncated class, so bytes do
  // not carry into each other.
  friend Monomial operator*(Monomial a, Monomial b) {
    Monomial m;
    m.packed_ = a.packed_ + b.packed_;
    return m;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  unsigned byte(std::size_t i) const { return static_cast<unsigned>((packed_ >> (8 * i)) & 0xffu); }
  Monomial with_byte(std::size_t i, unsigned v) const {
    if (v > kMaxWeight) throw resource_limit("exponent exceeds " + std::to_string(kMaxWeight));
    Monomial m = *this;
    m.packed_ = (packed_ & ~(std::uint64_t{0xff} << (8 * i))) | (std::uint64_t{v} << (8 * i));
    return m;
  }

  std::uint64_t packed_ = 0;
};

/// Element of Q[x_1..x_k] (x) Q[theta]/(theta^{g+1}), truncated above a total
/// weight. Immutable in spirit: the arithmetic operators return new values.
class GradedClass {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit GradedClass(ClassContext ctx) : ctx_(ctx) {
    if (ctx.roots > kMaxRoots) throw resource_limit("at most " + std::to_string(kMaxRoots) + " Chern roots");
    if (ctx.truncation > kMaxWeight) throw resource_limit("truncation weight exceeds " + std::to_string(kMaxWeight));
  }

  static GradedClass constant(ClassContext ctx, const Rational& c) {
    GradedClass a(ctx);
    a.add_term(Monomial{}, c);
    return a;
  }
  static GradedClass one(ClassContext ctx) { return constant(ctx, 1); }

  static GradedClass theta(ClassContext ctx, unsigned power = 1) {
    GradedClass a(ctx);
    a.add_term(Monomial{}.with_theta(power), 1);
    return a;
  }

  // x_{i+1}^power
  static GradedClass root(ClassContext ctx, std::size_t i, unsigned power = 1) {
    if (i >= ctx.roots) throw invalid_argument("Chern root index out of range");
    GradedClass a(ctx);
    a.add_term(Monomial{}.with_x(i, power), 1);
    return a;
  }

  static GradedClass monomial(ClassContext ctx, std::span<const unsigned> x, unsigned theta_power,
                              const Rational& c = 1) {
    if (x.size() != ctx.roots) throw invalid_argument("exponent vector length differs from root count");
    GradedClass a(ctx);
    a.add_term(Monomial::make(x, theta_power), c);
    return a;
  }

  const ClassContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool admits(Monomial m) const { return m.weight() <= ctx_.truncation && m.theta() <= ctx_.genus; }

  void add_term(Monomial m, const Rational& c) {
    if (c == 0 || !admits(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial{}); }

  GradedClass component(unsigned weight) const {
    GradedClass out(ctx_);
    for (const auto& [m, c] : terms_)
      if (m.weight() == weight) out.terms_.emplace(m, c);
    return out;
  }

  // Same class viewed in another context with the same genus and roots.
  GradedClass in_context(ClassContext ctx) const {
    if (ctx.genus != ctx_.genus || ctx.roots != ctx_.roots)
      throw invalid_argument("in_context: genus and root count must agree");
    GradedClass out(ctx);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  /// Invariance of the terms map under every permutation of x_1..x_k.
  bool is_symmetric() const {
    std::vector<std::size_t> perm(ctx_.roots);
    for (const auto& [m, c] : terms_) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Monomial p = m;
        for (std::size_t i = 0; i < perm.size(); ++i) p = p.with_x(i, m.x(perm[i]));
        if (coefficient(p) != c) return false;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
  }

  GradedClass& operator+=(const GradedClass& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedClass& operator-=(const GradedClass& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  GradedClass& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator-(GradedClass a) { return a *= Rational(-1); }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }

  friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    a.check_context(b);
    const unsigned cap = a.ctx_.truncation;
    // Bucket b by weight so pairs beyond the truncation are never formed.
    std::vector<std::vector<std::pair<Monomial, const Rational*>>> by_weight(cap + 1);
    for (const auto& [m, c] : b.terms_) by_weight[m.weight()].emplace_back(m, &c);

    GradedClass out(a.ctx_);
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
      const unsigned wa = ma.weight();
      for (unsigned wb = 0; wa + wb <= cap; ++wb) {
        for (const auto& [mb, cb] : by_weight[wb]) {
          if (ma.theta() + mb.theta() > a.ctx_.genus) continue;
          prod = ca * *cb;
          out.add_term(ma * mb, prod);
        }
      }
    }
    return out;
  }

  GradedClass& operator*=(const GradedClass& o) { return *this = *this * o; }

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GradedClass& a) {
    if (a.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : a.terms_) {
      os << (first ? "" : " + ") << c;
      for (std::size_t i = 0; i < a.ctx_.roots; ++i)
        if (m.x(i)) os << "*x" << i + 1 << (m.x(i) > 1 ? "^" + std::to_string(m.x(i)) : "");
      if (m.theta()) os << "*th" << (m.theta() > 1 ? "^" + std::to_string(m.theta()) : "");
      first = false;
    }
    return os;
  }

 private:
  void check_context(const GradedClass& o) const {
    if (!(ctx_ == o.ctx_)) throw invalid_argument("graded classes live in different contexts");
  }

  ClassContext ctx_;
  Terms terms_;
};

inline GradedClass class_multiply(const GradedClass& a, const GradedClass& b) { return a * b; }

inline GradedClass class_pow(const GradedClass& base, unsigned exponent) {
  GradedClass out = GradedClass::one(base.context());
  GradedClass b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return out;
}

/// Multiplicative inverse of a unit with constant term 1, solved weight by
/// weight: b_0 = 1, b_w = -sum_{i=1..w} a_i b_{w-i}.
inline GradedClass class_invert(const GradedClass& a) {
  if (a.constant_term() != 1) throw invalid_argument("class_invert: constant term must be 1");
  const ClassContext& ctx = a.context();
  std::vector<GradedClass> parts;
  for (unsigned w = 0; w <= ctx.truncation; ++w) parts.push_back(a.component(w));

  std::vector<GradedClass> inv{GradedClass::one(ctx)};
  GradedClass out = inv[0];
  for (unsigned w = 1; w <= ctx.truncation; ++w) {
    GradedClass bw(ctx);
    for (unsigned i = 1; i <= w; ++i)
      if (!parts[i].is_zero() && !inv[w - i].is_zero()) bw -= parts[i] * inv[w - i];
    out += bw;
    inv.push_back(std::move(bw));
  }
  return out;
}

// sum_i exp(x_i), truncated.
inline GradedClass exp_root_sum(ClassContext ctx) {
  GradedClass out(ctx);
  for (std::size_t i = 0; i < ctx.roots; ++i) {
    Rational term = 1;
    for (unsigned p = 0; p <= ctx.truncation; ++p) {
      if (p) term /= p;
      out.add_term(Monomial{}.with_x(i, p), term);
    }
  }
  return out;
}

/// Total Chern class from the Chern character via Newton's identities on the
/// power sums P_p = p! ch_p:  p c_p = sum_{i=1..p} (-1)^{i-1} P_i c_{p-i}.
inline GradedClass chern_from_character(const GradedClass& ch, unsigned rank) {
  if (ch.constant_term() != rank)
    throw invalid_argument("chern_from_character: constant term of ch must equal the rank");
  const ClassContext& ctx = ch.context();
  std::vector<GradedClass> power_sums{GradedClass(ctx)};
  for (unsigned p = 1; p <= ctx.truncation; ++p)
    power_sums.push_back(ch.component(p) * Rational(factorial(p)));

  std::vector<GradedClass> c{GradedClass::one(ctx)};
  GradedClass total = c[0];
  for (unsigned p = 1; p <= ctx.truncation; ++p) {
    GradedClass cp(ctx);
    for (unsigned i = 1; i <= p; ++i) {
      if (power_sums[i].is_zero() || c[p - i].is_zero()) continue;
      GradedClass term = power_sums[i] * c[p - i];
      if (i % 2) cp += term;
      else cp -= term;
    }
    cp *= Rational(1, p);
    total += cp;
    c.push_back(std::move(cp));
  }
  return total;
}

/// Inverse of chern_from_character for a bundle of the given rank.
inline GradedClass character_from_chern(const GradedClass& c, unsigned rank) {
  if (c.constant_term() != 1) throw invalid_argument("character_from_chern: total Chern class must start with 1");
  const ClassContext& ctx = c.context();
  std::vector<GradedClass> cs;
  for (unsigned p = 0; p <= ctx.truncation; ++p) cs.push_back(c.component(p));

  std::vector<GradedClass> power_sums{GradedClass(ctx)};
  GradedClass ch = GradedClass::constant(ctx, rank);
  for (unsigned p = 1; p <= ctx.truncation; ++p) {
    // (-1)^{p-1} P_p = p c_p - sum_{i<p} (-1)^{i-1} P_i c_{p-i}
    GradedClass acc = cs[p] * Rational(p);
    for (unsigned i = 1; i < p; ++i) {
      if (power_sums[i].is_zero() || cs[p - i].is_zero()) continue;
      GradedClass term = power_sums[i] * cs[p - i];
      if (i % 2) acc -= term;
      else acc += term;
    }
    if (p % 2 == 0) acc *= Rational(-1);
    ch += acc * Rational(1, factorial(p));
    power_sums.push_back(std::move(acc));
  }
  return ch;
}

// h_p(x_1..x_k): sum of all x-monomials of degree p.
inline GradedClass complete_homogeneous(ClassContext ctx, unsigned p) {
  GradedClass out(ctx);
  if (ctx.roots == 0) {
    if (p == 0) out.add_term(Monomial{}, 1);
    return out;
  }
  std::vector<unsigned> exps(ctx.roots, 0);
  // Enumerate compositions of p into k parts.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == exps.size()) {
      exps[i] = left;
      out.add_term(Monomial::make(exps), 1);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      exps[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, p);
  return out;
}

namespace detail {

struct SignedPermutation {
  std::vector<std::size_t> image;
  int sign;
};

inline std::vector<SignedPermutation> permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    out.push_back({p, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

inline Rational inverse_factorial(long p) {
  if (p < 0) return 0;
  return Rational(Integer(1), factorial(static_cast<unsigned>(p)));
}

}  // namespace detail

/// Schur polynomial s_lambda(x_1..x_k) through the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}). Zero when lambda has more than k parts.
inline GradedClass schur_polynomial(ClassContext ctx, const Partition& lambda) {
  GradedClass out(ctx);
  const std::size_t len = lambda.length();
  if (len > ctx.roots) return out;
  if (len == 0) return GradedClass::one(ctx);
  std::map<long, GradedClass> h;
  auto h_of = [&](long p) -> const GradedClass& {
    auto it = h.find(p);
    if (it == h.end())
      it = h.emplace(p, p < 0 ? GradedClass(ctx) : complete_homogeneous(ctx, static_cast<unsigned>(p))).first;
    return it->second;
  };
  for (const auto& perm : detail::permutations(len)) {
    GradedClass term = GradedClass::constant(ctx, perm.sign);
    for (std::size_t i = 0; i < len && !term.is_zero(); ++i)
      term *= h_of(static_cast<long>(lambda[i]) - static_cast<long>(i) + static_cast<long>(perm.image[i]));
    out += term;
  }
  return out;
}

/// Coefficients in the basis s_lambda(x) theta^m.
using SchurExpansion = std::map<std::pair<Partition, unsigned>, Rational>;

/// Bialternant route: the coefficient of s_lambda in a symmetric a is the
/// coefficient of x^{lambda + delta} in a * prod_{i<j} (x_i - x_j), with
/// delta = (k-1, ..., 1, 0).
inline SchurExpansion schur_expand(const GradedClass& a) {
  if (!a.is_symmetric()) throw invalid_argument("schur_expand: class is not symmetric in the Chern roots");
  const std::size_t k = a.context().roots;
  const auto perms = detail::permutations(k);
  SchurExpansion out;
  std::vector<unsigned> shifted(k);
  for (const auto& [m, c] : a.terms()) {
    for (const auto& perm : perms) {
      for (std::size_t i = 0; i < k; ++i) shifted[i] = m.x(i) + static_cast<unsigned>(k - 1 - perm.image[i]);
      bool strictly_decreasing = true;
      for (std::size_t i = 0; i + 1 < k; ++i)
        if (shifted[i] <= shifted[i + 1]) {
          strictly_decreasing = false;
          break;
        }
      if (!strictly_decreasing) continue;
      std::vector<unsigned> parts(k);
      for (std::size_t i = 0; i < k; ++i) parts[i] = shifted[i] - static_cast<unsigned>(k - 1 - i);
      auto key = std::make_pair(Partition(std::move(parts)), m.theta());
      Rational& slot = out[key];
      slot += perm.sign * c;
      if (slot == 0) out.erase(key);
    }
  }
  return out;
}

/// pi_*(s_lambda(S^dual) theta^m) for pi: Gr(k, E) -> Pic^d:
/// det( s_{lambda_i - (e-k) - i + j}(E) )_{k x k} theta^m, with the Segre
/// classes of the Picard bundle s_p(E) = theta^p / p!.
inline Polynomial pushforward_schur(const Partition& lambda, unsigned theta_power, const BNParameters& params) {
  const std::size_t k = static_cast<std::size_t>(params.k);
  if (lambda.length() > k)
    throw invalid_argument("pushforward: partition has more than k = " + std::to_string(k) + " parts");
  const long n = params.e - params.k;
  const long degree = static_cast<long>(theta_power) + static_cast<long>(lambda.weight()) - static_cast<long>(k) * n;
  if (degree < 0 || degree > params.g) return {};
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = detail::inverse_factorial(static_cast<long>(lambda[i]) - n + static_cast<long>(j) - static_cast<long>(i));
  return Polynomial::monomial(static_cast<std::size_t>(degree), detail::determinant(std::move(m)));
}

inline void check_class_matches(const GradedClass& a, const BNParameters& params) {
  if (a.context().roots != static_cast<unsigned>(params.k) || a.context().genus != static_cast<unsigned>(params.g))
    throw invalid_argument("class context does not match the Grassmann bundle (genus, k)");
}

// Polynomial in theta, truncated at theta^g.
inline Polynomial pushforward(const GradedClass& a, const BNParameters& params) {
  check_class_matches(a, params);
  Polynomial out;
  for (const auto& [key, c] : schur_expand(a)) out += c * pushforward_schur(key.first, key.second, params);
  return out;
}

/// Integral over the Grassmann bundle: the theta^g coefficient of the
/// pushforward times the torus integral of theta^g, which is g!.
inline Rational integrate(const GradedClass& a, const BNParameters& params) {
  return pushforward(a, params).coefficient(static_cast<std::size_t>(params.g)) *
         Rational(factorial(static_cast<unsigned>(params.g)));
}

// Products of the truncated cofactor pair monomials in 2(k+1) variables with
// total weight at most rho; beyond this many pairs we refuse.
inline constexpr double kMaxProductPairs = 2.0e7;

/// chi(G^r_d) as the integral over Gr(k, E) of e(H) c(TG)/c(H), where G^r_d
/// is the zero locus of a section of H = S^dual (x) F, rank kf.
///   c(TG)       = c(S^dual (x) E) / prod_{i,j} (1 + x_i - x_j),
///   ch(S^dual (x) E) = (sum_i e^{x_i}) (e - theta),
///   c(H)        = prod_i (1 + x_i)^f,   e(H) = (x_1 ... x_k)^f.
inline Integer euler_characteristic_Grd(const BNParameters& params) {
  if (params.rho < 0) throw empty_locus("rho < 0: W^r_d empty for general C");
  const unsigned g = static_cast<unsigned>(params.g);
  const unsigned k = static_cast<unsigned>(params.k);
  const unsigned f = static_cast<unsigned>(params.f);
  const unsigned rho = static_cast<unsigned>(params.rho);

  if (k > kMaxRoots) throw resource_limit("r + 1 exceeds " + std::to_string(kMaxRoots) + " Chern roots");
  if (params.bundle_dim() > static_cast<int>(kMaxWeight))
    throw resource_limit("Grassmann bundle dimension exceeds " + std::to_string(kMaxWeight));
  {
    double pairs = 1;
    const unsigned vars = 2 * (k + 1);
    for (unsigned i = 1; i <= vars; ++i) pairs = pairs * (rho + i) / i;
    if (pairs > kMaxProductPairs)
      throw resource_limit("input outside the desk-scale envelope (rho = " + std::to_string(rho) +
                           ", k = " + std::to_string(k) + ")");
  }
  if (params.bundle_dim() - static_cast<int>(k * f) != params.rho)
    throw internal_consistency("weight bookkeeping g + k(e-k) - kf != rho");

  // The cofactor is only ever read in weight rho.
  const ClassContext low{g, k, rho};
  GradedClass ch_hom = exp_root_sum(low) * (GradedClass::constant(low, params.e) - GradedClass::theta(low));
  GradedClass c_hom_e = chern_from_character(ch_hom, k * static_cast<unsigned>(params.e));

  GradedClass c_end = GradedClass::one(low);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) c_end *= GradedClass::one(low) + GradedClass::root(low, i) - GradedClass::root(low, j);

  GradedClass c_h = GradedClass::one(low);
  for (std::size_t i = 0; i < k; ++i) c_h *= class_pow(GradedClass::one(low) + GradedClass::root(low, i), f);

  GradedClass cofactor = (c_hom_e * class_invert(c_end) * class_invert(c_h)).component(rho);

  const ClassContext full{g, k, static_cast<unsigned>(params.bundle_dim())};
  std::vector<unsigned> top(k, f);
  const Monomial euler_class = Monomial::make(top);
  GradedClass integrand(full);
  for (const auto& [m, c] : cofactor.terms()) integrand.add_term(m * euler_class, c);
  for (const auto& [m, c] : integrand.terms())
    if (m.weight() != full.truncation) throw internal_consistency("integrand is not of top weight");
  if (integrand.terms().size() != cofactor.terms().size())
    throw internal_consistency("integrand lost terms to truncation");

  Rational chi = integrate(integrand, params);
  if (!is_integral(chi)) throw internal_consistency("Euler characteristic is not an integer");
  return chi.get_num();
}

inline Integer euler_characteristic_Grd(int g, int d, int r, std::optional<int> f = std::nullopt) {
  return euler_characteristic_Grd(degeneracy_parameters(g, d, r, f));
}

}  // namespace bn
