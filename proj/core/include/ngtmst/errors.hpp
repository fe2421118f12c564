// Copyright 2026 The ngtmst Authors
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

#ifndef NGTMST_ERRORS_HPP
#define NGTMST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ngtmst {

// Parameter outside its physical domain (T outside [0,1], kappa < 1/2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller broke an API contract that is not a physics-domain issue.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A truncated series would exceed the configured coefficient budget.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Gaussian integral with a weight that is not positive definite.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Heralding event with vanishing probability (or T_i = 0).
class DegenerateHeraldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity that must be real/positive by construction came out otherwise.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Fock-space truncation too small for the requested state.
class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ngtmst

#endif  // NGTMST_ERRORS_HPP
