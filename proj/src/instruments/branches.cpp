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

#include "decoguard/branches.hpp"

#include <charconv>

#include "decoguard/error.hpp"

namespace decoguard {

BranchEnsemble::BranchEnsemble(const DensityMatrix& rho) : branches_{Branch{"", rho.mat(), true}} {}

double BranchEnsemble::total_weight() const {
  double sum = 0.0;
  for (const Branch& b : branches_) sum += b.weight();
  return sum;
}

double BranchEnsemble::accepted_weight() const {
  double sum = 0.0;
  for (const Branch& b : branches_) {
    if (b.accepted) sum += b.weight();
  }
  return sum;
}

ComplexMatrix BranchEnsemble::accepted_sum() const {
  if (branches_.empty()) throw DomainError("empty branch ensemble");
  ComplexMatrix sum(branches_.front().state.dim());
  for (const Branch& b : branches_) {
    if (b.accepted) sum += b.state;
  }
  return sum;
}

DensityMatrix BranchEnsemble::accepted_state() const {
  const ComplexMatrix sum = accepted_sum();
  if (!(sum.trace().real() > 0.0)) throw DomainError("no accepted weight to normalize");
  return DensityMatrix::normalized(sum);
}

const Branch* BranchEnsemble::find(const std::string& label) const {
  for (const Branch& b : branches_) {
    if (b.label == label) return &b;
  }
  return nullptr;
}

std::string BranchEnsemble::summary() const {
  std::string out;
  for (const Branch& b : branches_) {
    if (!out.empty()) out += ';';
    if (!b.accepted) out += '!';
    out += b.label.empty() ? "root" : b.label;
    out += ':';
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), b.weight(), std::chars_format::general, 6);
    out.append(buf, res.ptr);
  }
  return out;
}

std::string join_label(const std::string& prefix, const std::string& outcome) {
  if (prefix.empty()) return outcome;
  return prefix + "/" + outcome;
}

}  // namespace decoguard
