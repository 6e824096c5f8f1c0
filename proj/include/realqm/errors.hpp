// Copyright 2026 The realqm Authors
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

#ifndef REALQM_ERRORS_HPP_
#define REALQM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace realqm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (matmul, lifts, state/observable pairs).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical constraint of the input is violated: a state that is not
/// positive, an energy below the oscillator bound, a Hamiltonian that does
/// not commute with J, and so on. The message names the constraint.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace realqm

#endif  // REALQM_ERRORS_HPP_
