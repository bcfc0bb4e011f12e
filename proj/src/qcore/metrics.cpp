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

#include "decoguard/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "decoguard/error.hpp"
#include "decoguard/hermitian_eig.hpp"

namespace decoguard {
namespace {

constexpr double kPureThreshold = 1.0 - 1e-10;

// Eigenvalues in [-1e-10, 0) are clipped to zero; anything below is invalid.
double clip_eigenvalue(double lambda) {
  if (lambda < -DensityMatrix::kNegativeEigTol) {
    throw DomainError("negative eigenvalue " + std::to_string(lambda) + " in metric evaluation");
  }
  return std::max(lambda, 0.0);
}

// Square roots amplify rounding noise: an eigenvalue of 1e-17 left over
// from a pure state contributes ~3e-9 to the fidelity. Treat eigenvalues
// below this floor as exact zeros before taking roots.
constexpr double kZeroFloor = 1e-14;

double root_of(double lambda) {
  const double l = clip_eigenvalue(lambda);
  return l < kZeroFloor ? 0.0 : std::sqrt(l);
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double fidelity_general(const DensityMatrix& rho_in, const DensityMatrix& rho_f) {
  if (rho_in.dim() != rho_f.dim()) throw DomainError("fidelity: dimension mismatch");
  const ComplexMatrix root =
      spectral_apply(eig_hermitian(rho_in.mat()), [](double l) { return root_of(l); });
  ComplexMatrix inner = root * rho_f.mat() * root;
  inner = (inner + inner.adjoint()) * Complex(0.5);
  double sum = 0.0;
  for (double l : eig_hermitian(inner).values) sum += root_of(l);
  return clamp_unit(sum);
}

double fidelity(const DensityMatrix& rho_in, const DensityMatrix& rho_f) {
  if (rho_in.dim() != rho_f.dim()) throw DomainError("fidelity: dimension mismatch");
  if (rho_in.purity() >= kPureThreshold) {
    // For pure rho_in = |psi><psi|, <psi|rho_f|psi> = Tr(rho_in rho_f).
    const double overlap = (rho_in.mat() * rho_f.mat()).trace().real();
    return clamp_unit(std::sqrt(std::max(overlap, 0.0)));
  }
  return fidelity_general(rho_in, rho_f);
}

double fidelity_pure(const Spinor& psi, const ComplexMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("fidelity_pure: expected a one-qubit state");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) acc += std::conj(psi[i]) * rho(i, j) * psi[j];
  }
  return clamp_unit(std::sqrt(std::max(acc.real(), 0.0)));
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DomainError("concurrence requires a two-qubit state");
  const ComplexMatrix yy = tensor(pauli::y(), pauli::y());
  const ComplexMatrix tilde = yy * rho.mat().conjugate() * yy;

  // rho * tilde is not Hermitian, but it shares its spectrum with
  // sqrt(rho) tilde sqrt(rho), which is.
  const ComplexMatrix root =
      spectral_apply(eig_hermitian(rho.mat()), [](double l) { return root_of(l); });
  ComplexMatrix r = root * tilde * root;
  r = (r + r.adjoint()) * Complex(0.5);

  std::vector<double> lambdas;
  for (double l : eig_hermitian(r).values) lambdas.push_back(root_of(l));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::clamp(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3], 0.0, 1.0);
}

}  // namespace decoguard
