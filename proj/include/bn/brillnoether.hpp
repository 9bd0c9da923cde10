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

// Betti numbers of G^r_d(C) and intersection cohomology of W^r_d(C) for a
// general curve C of genus g.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bn/errors.hpp"
#include "bn/exactmath.hpp"
#include "bn/parameters.hpp"
#include "bn/schubert.hpp"
#include "bn/topology.hpp"

namespace bn {

/// dim W^{r+l}_d, i.e. rho(g, d, r+l). Cross-checked against the degeneracy
/// form dim Pic - (e - (s-l)) (f - (s-l)) on every call.
inline long expected_dim_stratum(const BNParameters& p, int l) {
  if (l < 0) throw invalid_argument("stratum index must be >= 0");
  const long rho_l = brill_noether_number(p.g, p.d, p.r + l);
  const long threshold = p.s - l;
  const long delta = p.g - (p.e - threshold) * (p.f - threshold);
  if (delta != rho_l) throw internal_consistency("expected dimension disagrees with delta(s-l)");
  return rho_l;
}

// The fibre of G^r_d -> W^r_d over W^{r+l} \ W^{r+l+1} is Gr(r+1, r+1+l).
inline long fiber_dimension(const BNParameters& p, int l) {
  if (l < 0) throw invalid_argument("stratum index must be >= 0");
  return static_cast<long>(p.k) * l;
}

enum class SmallnessVerdict { small, semismall_not_small, not_small, vacuously_small };

inline std::string_view to_string(SmallnessVerdict v) {
  switch (v) {
    case SmallnessVerdict::small: return "small";
    case SmallnessVerdict::semismall_not_small: return "semismall_not_small";
    case SmallnessVerdict::not_small: return "not_small";
    case SmallnessVerdict::vacuously_small: return "vacuously_small";
  }
  return "unknown";
}

inline SmallnessVerdict verdict_from_string(std::string_view s) {
  for (auto v : {SmallnessVerdict::small, SmallnessVerdict::semismall_not_small, SmallnessVerdict::not_small,
                 SmallnessVerdict::vacuously_small})
    if (to_string(v) == s) return v;
  throw invalid_argument("unknown smallness verdict '" + std::string(s) + "'");
}

struct Stratum {
  int l = 0;
  long stratum_dim = 0;
  long fiber_dim = 0;
  long slack = 0;  // dim G^r_d - (dim stratum + 2 fibre dim)

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct SmallnessReport {
  std::vector<Stratum> strata;
  SmallnessVerdict verdict = SmallnessVerdict::vacuously_small;

  bool certified() const { return verdict == SmallnessVerdict::small || verdict == SmallnessVerdict::vacuously_small; }
};

/// Goresky-MacPherson smallness of G^r_d -> W^r_d: every nonempty stratum
/// W^{r+l}, l >= 1, must satisfy dim W^{r+l} + 2 (r+1) l < rho.
inline SmallnessReport smallness_check(const BNParameters& p) {
  if (p.rho < 0) throw empty_locus("rho < 0: W^r_d empty for general C");
  SmallnessReport report;
  for (int l = 1;; ++l) {
    const long dim = expected_dim_stratum(p, l);
    if (dim < 0) break;  // rho(g,d,r+l) is strictly decreasing in l
    const long fiber = fiber_dimension(p, l);
    const long slack = p.rho - (dim + 2 * fiber);
    if (slack != static_cast<long>(l) * (p.w + l - p.r - 1))
      throw internal_consistency("smallness slack disagrees with l(w + l - r - 1)");
    report.strata.push_back({l, dim, fiber, slack});
  }
  if (report.strata.empty()) {
    report.verdict = SmallnessVerdict::vacuously_small;
    return report;
  }
  long worst = report.strata.front().slack;
  for (const auto& s : report.strata) worst = std::min(worst, s.slack);
  report.verdict = worst > 0    ? SmallnessVerdict::small
                   : worst == 0 ? SmallnessVerdict::semismall_not_small
                                : SmallnessVerdict::not_small;
  return report;
}

/// Betti table of G^r_d(C). Below the middle degree it agrees with the
/// Grassmann bundle Gr(r+1, E); above by Poincare duality; the middle entry
/// is fixed by the Euler characteristic phi.
inline BettiTable betti_G_from_phi(const BNParameters& p, const Integer& phi) {
  if (p.rho < 0) throw empty_locus("rho < 0: W^r_d empty for general C");
  const auto rho = static_cast<std::size_t>(p.rho);
  const Polynomial bundle = poincare_grassmann_bundle(p.g, p.k, p.e);
  std::vector<Integer> betti(2 * rho + 1);
  Integer alternating = 0;
  for (std::size_t i = 0; i < rho; ++i) {
    const Rational c = bundle.coefficient(i);
    betti[i] = c.get_num();
    betti[2 * rho - i] = betti[i];
    alternating += (i % 2 ? -1 : 1) * betti[i];
  }
  Integer middle = phi - 2 * alternating;
  if (rho % 2) middle = -middle;
  if (middle < 0)
    throw internal_consistency("negative middle Betti number " + middle.get_str() + " for " +
                               std::to_string(p.g) + "," + std::to_string(p.d) + "," + std::to_string(p.r));
  betti[rho] = middle;
  return BettiTable(std::move(betti));
}

inline BettiTable betti_G(int g, int d, int r, std::optional<int> f = std::nullopt) {
  const BNParameters p = degeneracy_parameters(g, d, r, f);
  if (p.rho < 0) throw empty_locus("rho < 0: W^r_d empty for general C");
  return betti_G_from_phi(p, euler_characteristic_Grd(p));
}

struct IntersectionBetti {
  BettiTable table;
  SmallnessReport smallness;
  // IH(W) = H(G) is guaranteed only when the resolution is small.
  bool certified() const { return smallness.certified(); }
};

inline IntersectionBetti ih_betti_W(int g, int d, int r, std::optional<int> f = std::nullopt) {
  const BNParameters p = degeneracy_parameters(g, d, r, f);
  if (p.rho < 0) throw empty_locus("rho < 0: W^r_d empty for general C");
  return {betti_G_from_phi(p, euler_characteristic_Grd(p)), smallness_check(p)};
}

/// Number of g^r_d's on a general curve when rho = 0:
/// g! prod_{i=0..r} i! / (g-d+r+i)!.
inline Integer castelnuovo_count(int g, int d, int r) {
  if (brill_noether_number(g, d, r) != 0) throw invalid_argument("castelnuovo_count requires rho = 0");
  if (g < 0 || r < 0 || g - d + r < 0) throw invalid_argument("castelnuovo_count: invalid (g,d,r)");
  Rational count(factorial(static_cast<unsigned>(g)));
  for (int i = 0; i <= r; ++i)
    count *= make_rational(factorial(static_cast<unsigned>(i)), factorial(static_cast<unsigned>(g - d + r + i)));
  if (!is_integral(count)) throw internal_consistency("Castelnuovo count is not an integer");
  return count.get_num();
}

}  // namespace bn
