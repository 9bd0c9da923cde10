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

#include <stdexcept>
#include <string>

namespace bn {

// Every failure raised by the library derives from bn::error so that front
// ends can map categories onto exit codes without string matching.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_argument : public error {
 public:
  using error::error;
};

// w = g - d + r <= 0: every line bundle of degree d carries a g^r_d.
class unsupported_regime : public error {
 public:
  using error::error;
};

// rho < 0: W^r_d(C) is empty for a general curve.
class empty_locus : public error {
 public:
  using error::error;
};

class resource_limit : public error {
 public:
  using error::error;
};

// Raised when a computed quantity violates a structural guarantee (negative
// middle Betti number, non-integral Euler characteristic, ...). Always a bug.
class internal_consistency : public error {
 public:
  using error::error;
};

}  // namespace bn
