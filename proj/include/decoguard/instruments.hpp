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

#include <array>
#include <string>
#include <utility>

#include "decoguard/branches.hpp"
#include "decoguard/matrix.hpp"
#include "decoguard/state.hpp"

namespace decoguard {

enum class Axis { kX, kY, kZ };

std::string to_string(Axis axis);
/// Accepts "x", "y", "z" (case-insensitive). Throws DomainError otherwise.
Axis parse_axis(const std::string& text);

/// Two-outcome measurement {M+, M-} with M+^dagger M+ + M-^dagger M- = I.
struct MeasurementPair {
  enum class Family { kAxis, kGeneralized, kPreWeak };

  std::array<ComplexMatrix, 2> ops;
  std::array<std::string, 2> labels;
  Family family = Family::kAxis;
  Axis axis = Axis::kZ;
  double theta = 0.0;
  double beta = 0.0;
};

/// Variable-strength measurement along a Bloch axis:
/// M+ = cos(theta/2) P_up + sin(theta/2) P_down and M- with the roles swapped,
/// where P_up, P_down project onto the +axis and -axis eigenstates.
/// theta = 0 is projective, theta = pi/2 leaves the state untouched.
MeasurementPair povm_axis(Axis axis, double theta);

/// z-diagonal pair with a relative phase beta on the weak component:
/// M+ = cos(theta/2)|0><0| + e^{i beta} sin(theta/2)|1><1|,
/// M- = e^{i beta} sin(theta/2)|0><0| + cos(theta/2)|1><1|.
MeasurementPair povm_generalized(double theta, double beta);

/// M1 = diag(sqrt p, sqrt(1-p)), M2 = diag(sqrt(1-p), sqrt p); labels "M1", "M2".
MeasurementPair pre_wm_pair(double p);

/// Single Kraus operator of a post-selected (null-result) partial measurement.
struct PartialMeasurement {
  enum class Role { kWeak, kReversal, kPostWeakN, kPostWeakW, kPreWeak };

  ComplexMatrix op;
  double strength = 0.0;
  Role role = Role::kWeak;
};

/// diag(1, sqrt(1 - p1)): pushes weight toward |0>.
PartialMeasurement wm_map(double p1);
/// diag(sqrt(1 - p2), 1): the reversing measurement.
PartialMeasurement qmr_map(double p2);
/// N1 = diag(sqrt(1 - p_u), 1) and W1 = diag(1, sqrt(1 - p_v)).
std::pair<PartialMeasurement, PartialMeasurement> post_wm_ops(double p_u, double p_v);

/// F1 = I and F2 = X.
std::pair<ComplexMatrix, ComplexMatrix> flips();

struct Rotation {
  Axis axis = Axis::kZ;
  double eta = 0.0;
  int sign = +1;
  ComplexMatrix matrix;
};

/// Rotation by sign*eta, eta in [0, pi/2]:
/// R_x(+eta) = exp(-i eta X/2), R_y(+eta) = [[c, -s], [s, c]],
/// R_z(+eta) = diag(e^{i eta/2}, e^{-i eta/2}).
Rotation rotation(Axis axis, double eta, int sign);

/// Same matrix, without the eta range check; sign folded into the angle.
ComplexMatrix rotation_matrix(Axis axis, double signed_eta);

/// Splits rho into one branch per outcome; all branches accepted.
BranchEnsemble measure(const DensityMatrix& rho, const MeasurementPair& pair);

/// Applies the measurement to every accepted branch; rejected branches pass
/// through untouched.
BranchEnsemble measure(const BranchEnsemble& in, const MeasurementPair& pair);

/// Null-result post-selection: an accepted branch op rho op^dagger and a
/// rejected branch K rho K^dagger with K = sqrt(I - op^dagger op).
BranchEnsemble partial_measure(const DensityMatrix& rho, const PartialMeasurement& pm);

/// Same, applied to each accepted branch of an ensemble.
BranchEnsemble partial_measure(const BranchEnsemble& in, const PartialMeasurement& pm);

/// Lifts a single-qubit partial measurement to qubit 1 or 2 of a pair.
PartialMeasurement lift_local(const PartialMeasurement& pm, int qubit);

}  // namespace decoguard
