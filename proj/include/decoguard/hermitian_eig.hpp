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

#include <vector>

#include "decoguard/matrix.hpp"

namespace decoguard {

struct HermitianEigen {
  /// Descending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  ComplexMatrix vectors;
};

/// Eigendecomposition of a Hermitian 2x2 or 4x4 matrix by cyclic complex
/// Jacobi rotations. Throws DomainError if m is not Hermitian within 1e-10.
HermitianEigen eig_hermitian(const ComplexMatrix& m);

/// V diag(f(lambda)) V^dagger for a decomposition.
template <typename F>
ComplexMatrix spectral_apply(const HermitianEigen& eig, F&& f) {
  const std::size_t n = eig.vectors.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += fk * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
      }
    }
  }
  return out;
}

}  // namespace decoguard
