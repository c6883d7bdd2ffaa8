// Copyright 2026 The pauliclass Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace pauliclass {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different numbers of sites, or a site index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text, JSON or CSV input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A model, graph or gate violates its structural invariants.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A closure hit its member budget; the partial result is not usable here.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (leakage out of a class, imaginary generator
/// entry, broken antisymmetry). Always a bug or a corrupted input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not defined for this input.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Numerical integration could not meet its tolerance.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Sampled values are not described by a polynomial of the stated degree.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

}  // namespace pauliclass
