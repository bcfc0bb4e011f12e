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

#include <string>
#include <vector>

#include "decoguard/matrix.hpp"
#include "decoguard/state.hpp"

namespace decoguard {

/// One outcome path through a protocol. The state is unnormalized; its trace
/// is the probability of reaching this branch.
struct Branch {
  std::string label;
  ComplexMatrix state;
  bool accepted = true;

  double weight() const { return state.trace().real(); }
};

/// Outcome bookkeeping for a protocol run. Post-selection marks branches as
/// rejected instead of dropping them, so total weight stays 1 for any
/// trace-preserving pipeline.
class BranchEnsemble {
 public:
  BranchEnsemble() = default;
  explicit BranchEnsemble(const DensityMatrix& rho);
  explicit BranchEnsemble(std::vector<Branch> branches) : branches_(std::move(branches)) {}

  const std::vector<Branch>& branches() const { return branches_; }
  std::vector<Branch>& branches() { return branches_; }

  double total_weight() const;
  double accepted_weight() const;
  /// Sum of accepted branch states, unnormalized.
  ComplexMatrix accepted_sum() const;
  /// Accepted mixture divided by its weight. Throws DomainError when the
  /// accepted weight is zero.
  DensityMatrix accepted_state() const;
  const Branch* find(const std::string& label) const;

  /// "label:weight" pairs joined by ';' with rejected branches marked '!'.
  std::string summary() const;

 private:
  std::vector<Branch> branches_;
};

/// Appends a stage outcome to a branch label ("M2" + "F2" -> "M2/F2").
std::string join_label(const std::string& prefix, const std::string& outcome);

}  // namespace decoguard
