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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "decoguard/state.hpp"

namespace decoguard::kernels {

/// [[a, b], [conj(b), d]] with a, d real.
struct HermitianForm2 {
  double a = 0.0;
  double d = 0.0;
  double b_re = 0.0;
  double b_im = 0.0;
};

HermitianForm2 to_form(const ComplexMatrix& m);

/// Structure-of-arrays batch of one-qubit state vectors.
struct SpinorBatch {
  std::vector<double> re0, im0, re1, im1;

  std::size_t size() const { return re0.size(); }
  void push_back(const Spinor& v);
};

/// out[k] += <v_k| H |v_k> for k < n. Every backend performs the same IEEE
/// operations in the same order, so results agree bit for bit.
using AccumulateFn = void (*)(const HermitianForm2& h, const double* re0, const double* im0,
                              const double* re1, const double* im1, double* out, std::size_t n);

void accumulate_quadratic_form_scalar(const HermitianForm2& h, const double* re0, const double* im0,
                                      const double* re1, const double* im1, double* out, std::size_t n);
#if defined(DECOGUARD_HAVE_AVX2)
void accumulate_quadratic_form_avx2(const HermitianForm2& h, const double* re0, const double* im0,
                                    const double* re1, const double* im1, double* out, std::size_t n);
#endif

enum class Backend { kScalar, kAvx2 };

std::string to_string(Backend backend);
bool backend_available(Backend backend);
/// Best available backend on this CPU unless overridden by set_backend.
Backend active_backend();
/// Throws DomainError if the backend is not compiled in or not supported by
/// the running CPU.
void set_backend(Backend backend);
AccumulateFn resolve(Backend backend);

/// Dispatches to the active backend.
void accumulate_quadratic_form(const HermitianForm2& h, const SpinorBatch& v, std::span<double> out);

}  // namespace decoguard::kernels
