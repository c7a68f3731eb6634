// Copyright 2026 The eisrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace eisrec {

// Argument outside the mathematical domain of an operation (odd weight,
// n = 0 for a divisor sum, unsupported weight class, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Power series with vanishing constant term passed to reciprocal().
class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation point on or outside the unit circle.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested accuracy not reachable at the working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verified property failed. Indicates a bug in the implementation, never
// an expected outcome.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eisrec
