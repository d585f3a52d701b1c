// Copyright 2026 The OVPC Mesh Authors.
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

namespace ovpc {

/// Base of every error thrown by the library. The CLI maps the two
/// families below onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data problems: unreadable files, malformed records, non-finite values.
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Geometry and pipeline failures.
class GeometryError : public Error {
 public:
  using Error::Error;
};

class SizeError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Input does not span the dimension an operation needs. `dimension()` is
/// the affine dimension that was detected (0 = coincident, 1 = collinear,
/// 2 = coplanar).
class DegeneracyError : public GeometryError {
 public:
  DegeneracyError(const std::string& what, int dimension)
      : GeometryError(what), dimension_(dimension) {}
  int dimension() const { return dimension_; }

 private:
  int dimension_;
};

class StructuralError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class StateError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OrderingError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace ovpc
