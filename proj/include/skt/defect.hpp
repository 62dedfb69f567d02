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

#ifndef SKT_DEFECT_HPP
#define SKT_DEFECT_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "skt/scalar.hpp"

namespace skt {

/// Exact maximum |residual| of an identity over a finite set of basis tuples,
/// with the first tuple where the residual is nonzero.
struct Defect {
  Scalar max;
  std::vector<std::size_t> witness;

  bool ok() const { return max.is_zero(); }

  void update(const Scalar& residual, std::initializer_list<std::size_t> where) {
    if (residual.is_zero()) return;
    if (witness.empty()) witness.assign(where);
    Scalar a = residual.abs();
    if (a > max) max = std::move(a);
  }

  void merge(const Defect& other) {
    if (other.ok()) return;
    if (witness.empty()) witness = other.witness;
    if (other.max > max) max = other.max;
  }
};

}  // namespace skt

#endif  // SKT_DEFECT_HPP
