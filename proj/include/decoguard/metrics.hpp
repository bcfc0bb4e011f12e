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

#include "decoguard/state.hpp"

namespace decoguard {

/// Uhlmann fidelity Tr sqrt(sqrt(rho_in) rho_f sqrt(rho_in)), in [0, 1].
/// When rho_in is pure (purity >= 1 - 1e-10) evaluates sqrt(Tr(rho_in rho_f)).
double fidelity(const DensityMatrix& rho_in, const DensityMatrix& rho_f);

/// Always takes the matrix square-root route, regardless of purity.
double fidelity_general(const DensityMatrix& rho_in, const DensityMatrix& rho_f);

/// sqrt(<psi|rho|psi>) for a normalized state vector.
double fidelity_pure(const Spinor& psi, const ComplexMatrix& rho);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

}  // namespace decoguard
