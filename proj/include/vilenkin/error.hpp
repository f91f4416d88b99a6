// Copyright 2026 The vilenkin Authors
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

namespace vilenkin {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objects built over different generator sequences were combined.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An index, digit or parameter lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a function (e.g. order(0), p <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested object is not representable at the given resolution.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// Q_n == 0 or all weights vanish.
class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

// A documented precondition on the inputs does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace vilenkin
