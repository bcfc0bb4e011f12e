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

#include <immintrin.h>

#include "decoguard/kernels.hpp"

namespace decoguard::kernels {

void accumulate_quadratic_form_avx2(const HermitianForm2& h, const double* re0, const double* im0,
                                    const double* re1, const double* im1, double* out, std::size_t n) {
  const __m256d a = _mm256_set1_pd(h.a);
  const __m256d d = _mm256_set1_pd(h.d);
  const __m256d b_re = _mm256_set1_pd(h.b_re);
  const __m256d b_im = _mm256_set1_pd(h.b_im);
  const __m256d two = _mm256_set1_pd(2.0);

  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x0 = _mm256_loadu_pd(re0 + k);
    const __m256d y0 = _mm256_loadu_pd(im0 + k);
    const __m256d x1 = _mm256_loadu_pd(re1 + k);
    const __m256d y1 = _mm256_loadu_pd(im1 + k);

    const __m256d n0 = _mm256_add_pd(_mm256_mul_pd(x0, x0), _mm256_mul_pd(y0, y0));
    const __m256d n1 = _mm256_add_pd(_mm256_mul_pd(x1, x1), _mm256_mul_pd(y1, y1));
    const __m256d w_re = _mm256_add_pd(_mm256_mul_pd(x0, x1), _mm256_mul_pd(y0, y1));
    const __m256d w_im = _mm256_sub_pd(_mm256_mul_pd(x0, y1), _mm256_mul_pd(y0, x1));
    const __m256d cross = _mm256_sub_pd(_mm256_mul_pd(b_re, w_re), _mm256_mul_pd(b_im, w_im));
    const __m256d diag = _mm256_add_pd(_mm256_mul_pd(a, n0), _mm256_mul_pd(d, n1));
    const __m256d val = _mm256_add_pd(diag, _mm256_mul_pd(two, cross));
    _mm256_storeu_pd(out + k, _mm256_add_pd(_mm256_loadu_pd(out + k), val));
  }
  if (k < n) accumulate_quadratic_form_scalar(h, re0 + k, im0 + k, re1 + k, im1 + k, out + k, n - k);
}

}  // namespace decoguard::kernels
