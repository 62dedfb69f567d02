// Copyright 2026 The sktholo Authors
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

#ifndef SKT_ERRORS_HPP
#define SKT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skt {

/// Malformed configuration or serialized data.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but violates a mathematical precondition (odd rank,
/// nonpositive metric coefficient, I not contained in I_max, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internally inconsistent data, e.g. structure constants that do not match
/// their root system.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skt

#endif  // SKT_ERRORS_HPP
