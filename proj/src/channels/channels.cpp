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

#include "decoguard/channels.hpp"

#include <cmath>

#include "decoguard/error.hpp"

namespace decoguard {

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPhaseDamping:
      return "PD";
    case ChannelKind::kAmplitudeDamping:
      return "AD";
    case ChannelKind::kCustom:
      return "custom";
  }
  return "custom";
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, std::vector<std::string> labels,
                           ChannelKind kind, double r)
    : ops_(std::move(ops)), labels_(std::move(labels)), kind_(kind), r_(r) {
  if (ops_.empty()) throw DomainError("Kraus channel needs at least one operator");
  if (labels_.size() != ops_.size()) throw DomainError("one label per Kraus operator required");
  const std::size_t n = ops_.front().dim();
  ComplexMatrix sum(n);
  for (const ComplexMatrix& a : ops_) {
    if (a.dim() != n) throw DomainError("Kraus operators of mixed dimension");
    if (!a.all_finite()) throw DomainError("Kraus operator has non-finite entries");
    sum += a.adjoint() * a;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(n)) > kCompletenessTol) {
    throw DomainError("Kraus operators violate completeness");
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel({ComplexMatrix::identity(dim)}, {"I"}, ChannelKind::kCustom, 0.0);
}

DensityMatrix pd_flip(const DensityMatrix& rho, double r) {
  require_in_range(r, 0.0, 0.5, "phase-flip probability r");
  if (rho.dim() != 2) throw DomainError("pd_flip acts on one qubit");
  const ComplexMatrix z = pauli::z();
  return DensityMatrix::normalized(conjugate_by(z, rho.mat()) * Complex(r) +
                                   rho.mat() * Complex(1.0 - r));
}

double pd_lambda_to_r(double lambda) {
  const double s = std::sin(lambda / 2);
  return s * s;
}

double pd_flip_to_kraus_r(double r_flip) {
  require_in_range(r_flip, 0.0, 0.5, "phase-flip probability r");
  const double shrink = 1.0 - 2.0 * r_flip;
  return 1.0 - shrink * shrink;
}

KrausChannel pd_kraus(double r) {
  require_in_range(r, 0.0, 1.0, "phase-damping probability r");
  return KrausChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - r)}),
                       ComplexMatrix::diagonal({0.0, std::sqrt(r)})},
                      {"A0", "A1"}, ChannelKind::kPhaseDamping, r);
}

KrausChannel ad_kraus(double r) {
  require_in_range(r, 0.0, 1.0, "amplitude-damping probability r");
  return KrausChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - r)}),
                       ComplexMatrix(2, {0.0, std::sqrt(r), 0.0, 0.0})},
                      {"no-jump", "jump"}, ChannelKind::kAmplitudeDamping, r);
}

double ad_rate_to_r(double gamma, double t) {
  if (!(gamma >= 0.0)) throw DomainError("decay rate must be non-negative");
  if (!(t >= 0.0)) throw DomainError("time must be non-negative");
  return -std::expm1(-2.0 * gamma * t);
}

NoiseParams NoiseParams::probability(double r) {
  require_in_range(r, 0.0, 1.0, "r");
  return NoiseParams(Form::kProbability, r, 0.0);
}

NoiseParams NoiseParams::kick_angle(double lambda) {
  if (!std::isfinite(lambda)) throw DomainError("kick angle must be finite");
  return NoiseParams(Form::kKickAngle, lambda, 0.0);
}

NoiseParams NoiseParams::decay(double gamma, double t) {
  ad_rate_to_r(gamma, t);
  return NoiseParams(Form::kDecay, gamma, t);
}

double NoiseParams::r() const {
  switch (form_) {
    case Form::kProbability:
      return a_;
    case Form::kKickAngle:
      return pd_lambda_to_r(a_);
    case Form::kDecay:
      return ad_rate_to_r(a_, b_);
  }
  return a_;
}

ComplexMatrix apply_kraus(const ComplexMatrix& rho, const KrausChannel& ch) {
  if (rho.dim() != ch.dim()) throw DomainError("channel and state dimensions differ");
  ComplexMatrix out(rho.dim());
  for (const ComplexMatrix& a : ch.ops()) out += conjugate_by(a, rho);
  return out;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch) {
  const ComplexMatrix out = apply_kraus(rho.mat(), ch);
  const double drift = std::abs(out.trace() - 1.0);
  if (drift > 1e-12) {
    throw DomainError("channel output trace drifted by " + std::to_string(drift));
  }
  return DensityMatrix::normalized(out);
}

BranchEnsemble unravel(const BranchEnsemble& in, const KrausChannel& ch) {
  std::vector<Branch> out;
  for (const Branch& b : in.branches()) {
    if (!b.accepted) {
      out.push_back(b);
      continue;
    }
    if (b.state.dim() != ch.dim()) throw DomainError("channel and state dimensions differ");
    for (std::size_t i = 0; i < ch.ops().size(); ++i) {
      out.push_back(Branch{join_label(b.label, ch.labels()[i]), conjugate_by(ch.ops()[i], b.state), true});
    }
  }
  return BranchEnsemble(std::move(out));
}

BranchEnsemble ad_unravel(const DensityMatrix& rho, double r) {
  if (rho.dim() != 2) throw DomainError("ad_unravel acts on one qubit");
  return unravel(BranchEnsemble(rho), ad_kraus(r));
}

KrausChannel lift_local(const KrausChannel& ch, int qubit) {
  if (ch.dim() != 2) throw DomainError("lift_local expects a single-qubit channel");
  if (qubit != 1 && qubit != 2) throw DomainError("qubit index must be 1 or 2");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  std::vector<ComplexMatrix> ops;
  for (const ComplexMatrix& a : ch.ops()) ops.push_back(qubit == 1 ? tensor(a, id) : tensor(id, a));
  return KrausChannel(std::move(ops), ch.labels(), ch.kind(), ch.r());
}

}  // namespace decoguard
