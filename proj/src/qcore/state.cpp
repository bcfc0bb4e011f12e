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

#include "decoguard/state.hpp"

#include <cmath>
#include <numbers>

#include "decoguard/error.hpp"
#include "decoguard/hermitian_eig.hpp"

namespace decoguard {

DensityMatrix::DensityMatrix(const ComplexMatrix& mat) : mat_(mat) {
  if (!mat_.all_finite()) throw DomainError("density matrix has non-finite entries");
  if (!is_hermitian(mat_, kHermitianTol)) throw DomainError("density matrix is not Hermitian");
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw DomainError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  const HermitianEigen eig = eig_hermitian(mat_);
  if (eig.values.back() < -kNegativeEigTol) {
    throw DomainError("density matrix has negative eigenvalue " +
                      std::to_string(eig.values.back()));
  }
}

DensityMatrix DensityMatrix::normalized(const ComplexMatrix& mat) {
  const double tr = mat.trace().real();
  if (!(tr > 0.0)) throw DomainError("cannot normalize a matrix with non-positive trace");
  ComplexMatrix sym = (mat + mat.adjoint()) * Complex(0.5 / tr);
  return DensityMatrix(sym);
}

DensityMatrix DensityMatrix::pure(const Spinor& psi) {
  return normalized(ComplexMatrix::outer(psi.data(), psi.data(), 2));
}

DensityMatrix DensityMatrix::pure(const std::array<Complex, 4>& psi) {
  return normalized(ComplexMatrix::outer(psi.data(), psi.data(), 4));
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix bloch_to_density(const BlochVector& b) {
  if (!(b.norm() <= 1.0 + 1e-12)) {
    throw DomainError("Bloch vector length " + std::to_string(b.norm()) + " exceeds 1");
  }
  return DensityMatrix(ComplexMatrix(2, {0.5 * (1.0 + b.z), 0.5 * Complex(b.x, b.y),
                                         0.5 * Complex(b.x, -b.y), 0.5 * (1.0 - b.z)}));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("Bloch vectors are defined for one qubit only");
  const ComplexMatrix& m = rho.mat();
  return BlochVector{2.0 * m(0, 1).real(), 2.0 * m(0, 1).imag(), 2.0 * m(0, 0).real() - 1.0};
}

Spinor state_vector(const InitialState& s) {
  require_in_range(s.alpha, 0.0, std::numbers::pi / 2, "alpha");
  if (!(s.phi >= 0.0 && s.phi < 2.0 * std::numbers::pi)) {
    throw DomainError("phi = " + std::to_string(s.phi) + " outside [0, 2 pi)");
  }
  if (s.pair_sign != 1 && s.pair_sign != -1) throw DomainError("pair_sign must be +1 or -1");

  const double c = std::cos(s.alpha / 2);
  const Complex e = static_cast<double>(s.pair_sign) * std::polar(1.0, s.phi) * std::sin(s.alpha / 2);
  const double r = std::numbers::sqrt2 / 2;
  // |+> = (|0> + |1>)/sqrt2, |-> = (|0> - |1>)/sqrt2
  return Spinor{r * (c + e), r * (c - e)};
}

DensityMatrix state_from_angles(const InitialState& s) { return DensityMatrix::pure(state_vector(s)); }

}  // namespace decoguard
