// Copyright 2026 The memchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEMCHAN_ERRORS_HPP
#define MEMCHAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace memchan {

/// Argument outside the mathematical domain of a function (e.g. g(x) for x < 0).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// Malformed input: wrong dimension, asymmetric matrix, parameter out of range.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// A computation produced an unphysical intermediate (negative discriminant,
/// symplectic eigenvalue below the vacuum level).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

namespace tol {

/// Allowed asymmetry of covariance matrices.
inline constexpr double kSymmetry = 1e-12;
/// Slack below 1/2 tolerated for symplectic eigenvalues and on the
/// biquadratic discriminant before an input is declared unphysical.
inline constexpr double kPhysicality = 1e-9;
/// Agreement required between independent computation paths.
inline constexpr double kPathEquivalence = 1e-10;
/// Below this argument g(x) returns its limit 0.
inline constexpr double kEntropyFloor = 1e-12;

}  // namespace tol

}  // namespace memchan

#endif  // MEMCHAN_ERRORS_HPP
