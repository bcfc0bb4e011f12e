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

#include "decoguard/branches.hpp"
#include "decoguard/matrix.hpp"
#include "decoguard/state.hpp"

namespace decoguard {

enum class ChannelKind { kPhaseDamping, kAmplitudeDamping, kCustom };

std::string to_string(ChannelKind kind);

/// Ordered Kraus operators of a CPTP map, each with a branch label used when
/// the map is unraveled ("no-jump" / "jump" for amplitude damping).
class KrausChannel {
 public:
  static constexpr double kCompletenessTol = 1e-12;

  /// Throws DomainError if the operators are empty, of mixed dimension, or
  /// violate sum A^dagger A = I within kCompletenessTol.
  KrausChannel(std::vector<ComplexMatrix> ops, std::vector<std::string> labels, ChannelKind kind,
               double r);

  static KrausChannel identity(std::size_t dim = 2);

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  const std::vector<std::string>& labels() const { return labels_; }
  ChannelKind kind() const { return kind_; }
  double r() const { return r_; }
  std::size_t dim() const { return ops_.front().dim(); }

 private:
  std::vector<ComplexMatrix> ops_;
  std::vector<std::string> labels_;
  ChannelKind kind_;
  double r_;
};

/// Phase-flip form r Z rho Z + (1 - r) rho, r in [0, 0.5].
DensityMatrix pd_flip(const DensityMatrix& rho, double r);

/// Kick-angle form: r = sin^2(lambda / 2).
double pd_lambda_to_r(double lambda);

/// Flip probability to the equivalent Kraus damping parameter,
/// r_kraus = 1 - (1 - 2 r_flip)^2.
double pd_flip_to_kraus_r(double r_flip);

/// A0 = diag(1, sqrt(1 - r)), A1 = diag(0, sqrt(r)); r in [0, 1].
KrausChannel pd_kraus(double r);

/// A0 = diag(1, sqrt(1 - r)), A1 = sqrt(r) |0><1|; r in [0, 1].
KrausChannel ad_kraus(double r);

/// Decay probability after time t at rate gamma: 1 - exp(-2 gamma t).
double ad_rate_to_r(double gamma, double t);

/// One noise strength given in exactly one of the supported forms.
class NoiseParams {
 public:
  enum class Form { kProbability, kKickAngle, kDecay };

  static NoiseParams probability(double r);
  static NoiseParams kick_angle(double lambda);
  static NoiseParams decay(double gamma, double t);

  Form form() const { return form_; }
  /// The damping probability in [0, 1] implied by the populated form.
  double r() const;

 private:
  NoiseParams(Form form, double a, double b) : form_(form), a_(a), b_(b) {}
  Form form_;
  double a_;
  double b_;
};

/// sum_i A_i rho A_i^dagger. Trace drift up to 1e-12 is renormalized; more is
/// an error, as is a dimension mismatch.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch);

/// Same map on an unnormalized operator; no validation.
ComplexMatrix apply_kraus(const ComplexMatrix& rho, const KrausChannel& ch);

/// Jump/no-jump trajectories of amplitude damping: branch "no-jump" holds
/// A0 rho A0^dagger, branch "jump" holds A1 rho A1^dagger, both unnormalized.
BranchEnsemble ad_unravel(const DensityMatrix& rho, double r);

/// Splits every accepted branch into one sub-branch per Kraus operator,
/// labelled with the operator's label. Rejected branches pass through.
BranchEnsemble unravel(const BranchEnsemble& in, const KrausChannel& ch);

/// Tensors each single-qubit Kraus operator with the identity on the other
/// qubit. qubit 1 is the left (most significant) factor.
KrausChannel lift_local(const KrausChannel& ch, int qubit);

}  // namespace decoguard
