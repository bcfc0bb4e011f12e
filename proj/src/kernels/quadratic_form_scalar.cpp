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

#include "decoguard/kernels.hpp"

namespace decoguard::kernels {

// <v|H|v> = a|v0|^2 + d|v1|^2 + 2 Re(b conj(v0) v1). The AVX2 variant
// mirrors this expression tree exactly.
void accumulate_quadratic_form_scalar(const HermitianForm2& h, const double* re0, const double* im0,
                                      const double* re1, const double* im1, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double n0 = re0[k] * re0[k] + im0[k] * im0[k];
    const double n1 = re1[k] * re1[k] + im1[k] * im1[k];
    const double w_re = re0[k] * re1[k] + im0[k] * im1[k];
    const double w_im = re0[k] * im1[k] - im0[k] * re1[k];
    const double cross = h.b_re * w_re - h.b_im * w_im;
    out[k] += (h.a * n0 + h.d * n1) + 2.0 * cross;
  }
}

}  // namespace decoguard::kernels
