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

// The dictionary that presents W^r_d(C) as the degeneracy locus D_s(gamma) of
// a map gamma: E -> F of bundles on Pic^d(C), deg D = f.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>

#include "bn/errors.hpp"

namespace bn {

inline long brill_noether_number(long g, long d, long r) { return g - (r + 1) * (g - d + r); }

struct BNParameters {
  int g = 0;    // genus
  int d = 0;    // degree
  int r = 0;    // dimension of the linear series
  int f = 0;    // degree of the twisting divisor D, rank of F
  int e = 0;    // rank of E = d + f - g + 1
  int s = 0;    // degeneracy threshold f + d - g - r
  long rho = 0;
  int k = 0;    // r + 1 = e - s, rank of the tautological subbundle
  int w = 0;    // index of speciality g - d + r

  int min_f() const { return 2 * g - d - 1; }
  // Complex dimension of the Grassmann bundle Gr(k, E) over Pic^d.
  int bundle_dim() const { return g + k * (e - k); }

  friend bool operator==(const BNParameters&, const BNParameters&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BNParameters& p) {
    return os << "(g=" << p.g << ", d=" << p.d << ", r=" << p.r << ", f=" << p.f << ", e=" << p.e
              << ", s=" << p.s << ", rho=" << p.rho << ")";
  }
};

/// Without an explicit f, takes the smallest admissible one: 2g-d-1 (so that
/// e = g), raised if needed until the fibre Gr(r+1, e) is nonempty.
inline BNParameters degeneracy_parameters(int g, int d, int r, std::optional<int> f = std::nullopt) {
  if (g < 1) throw invalid_argument("genus must be >= 1");
  if (d < 1) throw invalid_argument("degree must be >= 1");
  if (r < 0) throw invalid_argument("r must be >= 0");
  const int w = g - d + r;
  if (w <= 0)
    throw unsupported_regime("g - d + r = " + std::to_string(w) +
                             " <= 0: W^r_d = Pic^d, outside the degeneracy-locus model");
  const int k = r + 1;
  const int f_bound = 2 * g - d - 1;
  int twist;
  if (f) {
    if (*f < f_bound)
      throw invalid_argument("f = " + std::to_string(*f) + " is below the bound 2g-d-1 = " +
                             std::to_string(f_bound));
    if (*f + d - g + 1 < k)
      throw invalid_argument("f = " + std::to_string(*f) + " gives rank(E) < r+1");
    twist = *f;
  } else {
    twist = std::max({f_bound, 0, k + g - 1 - d});
  }

  BNParameters p;
  p.g = g;
  p.d = d;
  p.r = r;
  p.f = twist;
  p.e = d + twist - g + 1;
  p.s = twist + d - g - r;
  p.k = k;
  p.w = w;
  p.rho = brill_noether_number(g, d, r);
  if (p.e - p.s != k || p.s < 0 || p.e < 1 || p.rho != g - static_cast<long>(k) * w)
    throw internal_consistency("degeneracy parameters violate e - s = r + 1");
  return p;
}

}  // namespace bn
