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

#include "decoguard/matrix.hpp"

namespace decoguard {

using Spinor = std::array<Complex, 2>;

/// Hermitian, unit-trace, positive semidefinite 2x2 or 4x4 matrix.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kNegativeEigTol = 1e-10;

  /// Validates every invariant; throws DomainError on violation.
  explicit DensityMatrix(const ComplexMatrix& mat);

  /// Divides by the trace and symmetrizes before validating. For
  /// unnormalized branch states and accumulated sums.
  static DensityMatrix normalized(const ComplexMatrix& mat);
  static DensityMatrix pure(const Spinor& psi);
  static DensityMatrix pure(const std::array<Complex, 4>& psi);

  const ComplexMatrix& mat() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }
  double purity() const;

 private:
  ComplexMatrix mat_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// rho = [[1 + z, x + i y], [x - i y, 1 - z]] / 2. Note the y sign: this is
/// the transpose of the usual (I + x X + y Y + z Z) / 2 convention.
/// Throws DomainError when |b| > 1 + 1e-12.
DensityMatrix bloch_to_density(const BlochVector& b);
/// x = 2 Re rho01, y = 2 Im rho01, z = 2 rho00 - 1. Single-qubit only.
BlochVector density_to_bloch(const DensityMatrix& rho);

/// cos(alpha/2)|+> + sign e^{i phi} sin(alpha/2)|->, with sign selecting the
/// member of a nonorthogonal pair.
struct InitialState {
  double alpha = 0.0;
  double phi = 0.0;
  int pair_sign = +1;
};

/// Throws DomainError unless alpha in [0, pi/2], phi in [0, 2 pi) and
/// pair_sign is +1 or -1.
Spinor state_vector(const InitialState& s);
DensityMatrix state_from_angles(const InitialState& s);

}  // namespace decoguard
