// Copyright 2026 The DecoGuard Authors
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

namespace decoguard {

/// Raised when an argument lies outside the documented domain of an operation
/// (out-of-range probability or angle, wrong matrix dimension, invalid state).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Throws DomainError unless lo <= value <= hi.
void require_in_range(double value, double lo, double hi, const char* name);

}  // namespace decoguard
