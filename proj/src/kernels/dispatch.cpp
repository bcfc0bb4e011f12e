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

#include <atomic>

#include "decoguard/error.hpp"
#include "decoguard/kernels.hpp"

namespace decoguard::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(DECOGUARD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar; }

std::atomic<Backend>& selected() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

HermitianForm2 to_form(const ComplexMatrix& m) {
  if (m.dim() != 2) throw DomainError("quadratic-form kernels take 2x2 matrices");
  return HermitianForm2{m(0, 0).real(), m(1, 1).real(), m(0, 1).real(), m(0, 1).imag()};
}

void SpinorBatch::push_back(const Spinor& v) {
  re0.push_back(v[0].real());
  im0.push_back(v[0].imag());
  re1.push_back(v[1].real());
  im1.push_back(v[1].imag());
}

std::string to_string(Backend backend) { return backend == Backend::kAvx2 ? "avx2" : "scalar"; }

bool backend_available(Backend backend) {
  return backend == Backend::kScalar || (backend == Backend::kAvx2 && cpu_has_avx2());
}

Backend active_backend() { return selected().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw DomainError("kernel backend '" + to_string(backend) + "' is not available on this build/CPU");
  }
  selected().store(backend, std::memory_order_relaxed);
}

AccumulateFn resolve(Backend backend) {
#if defined(DECOGUARD_HAVE_AVX2)
  if (backend == Backend::kAvx2 && cpu_has_avx2()) return &accumulate_quadratic_form_avx2;
#endif
  (void)backend;
  return &accumulate_quadratic_form_scalar;
}

void accumulate_quadratic_form(const HermitianForm2& h, const SpinorBatch& v, std::span<double> out) {
  if (out.size() < v.size()) throw DomainError("output span shorter than spinor batch");
  resolve(active_backend())(h, v.re0.data(), v.im0.data(), v.re1.data(), v.im1.data(), out.data(), v.size());
}

}  // namespace decoguard::kernels
