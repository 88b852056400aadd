// Copyright 2026 The bea Authors
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

namespace bea {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input that must be Hermitian is not, within tolerance.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

// Jacobi sweeps exhausted before the off-diagonal norm fell below threshold.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Matrix is not a valid density matrix.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (JSON files, settings).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bea
