// Copyright 2026 The choiscope Authors
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

#include <optional>
#include <stdexcept>
#include <string>

namespace choiscope {

// Base of every error raised by the library. Verdicts (a channel that is not
// CPP, a diagram pair that differs) are values, never exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or factor dimensions do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument is outside the domain of the operation (d < 1, empty sets, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The input lacks a mathematical property the operation requires, e.g. a
// non-hermitian matrix handed to the hermitian eigensolver. `value` carries the
// offending quantity when there is a single one (a negative eigenvalue, a
// residual norm).
class PropertyError : public Error {
 public:
  PropertyError(const std::string& what, std::optional<double> value = std::nullopt)
      : Error(what), value_(value) {}

  std::optional<double> value() const { return value_; }

 private:
  std::optional<double> value_;
};

// A factorization failed to converge or an internal cross-check disagreed.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace choiscope
