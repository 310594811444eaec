// Copyright 2026 The flowlab Authors
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

#ifndef FLOWLAB_ERRORS_HPP_
#define FLOWLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace flowlab {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// The requested eigenvector gauge has vanishing normalization at this point.
class GaugeSingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A winding-circle sample lies on a degeneracy point of the field.
class SingularSampleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonIntegerWindingError : public Error {
 public:
  using Error::Error;
};

// The field is degenerate (|d| below threshold) somewhere on a Chern grid.
class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Largest plaquette flux exceeded pi/2; the lattice is too coarse.
class UnreliableGridError : public Error {
 public:
  using Error::Error;
};

class MultipleRootError : public Error {
 public:
  using Error::Error;
};

// A branch touches E = 0 without changing sign.
class AmbiguousCrossingError : public Error {
 public:
  using Error::Error;
};

// An eigenvalue sits within tolerance of the band split energy.
class OnGapError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace flowlab

#endif  // FLOWLAB_ERRORS_HPP_
