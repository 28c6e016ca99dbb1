//
// Copyright 2026 the quboflow authors
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
//

#pragma once

#include <stdexcept>
#include <string>

namespace quboflow {

/// Bit-vector length or fixed-point format violation.
class FormatError : public std::invalid_argument {
public:
  explicit FormatError(const std::string& what) : std::invalid_argument(what) {}
};

/// Value outside the representable range of a fixed-point format.
class RangeError : public std::domain_error {
public:
  explicit RangeError(const std::string& what) : std::domain_error(what) {}
};

/// Mismatched vector/matrix dimensions.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid run or solver configuration.
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problem too large for the requested backend.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Zero pivot during tridiagonal elimination.
class SingularSystemError : public std::runtime_error {
public:
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file (QUBO triplets, config, manifest).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quboflow
