// Copyright 2026 The qlc Authors
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

#ifndef QLC_ERRORS_HPP
#define QLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlc {

// Mismatched qubit counts or incompatible vector dimensions between operands.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Rejected user-facing input: malformed files, schema violations, parameter
// combinations that break a documented constraint. Maps to process exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical invariant the engine itself must maintain was breached (norm
// drift, lost orthogonality). Signals a bug, not bad input. Exit code 3.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qlc

#endif  // QLC_ERRORS_HPP
