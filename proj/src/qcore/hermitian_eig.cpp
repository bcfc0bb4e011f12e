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

#include "decoguard/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "decoguard/error.hpp"

namespace decoguard {
namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_norm2(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return sum;
}

double diagonal_norm2(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::norm(a(i, i));
  return sum;
}

// Zeroes a(p, q) with G = diag(1, e^{-i arg a_pq}) * real Jacobi rotation,
// applied as a <- G^dagger a G and v <- v G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex h = a(p, q);
  const double g = std::abs(h);
  if (g == 0.0) return;
  const Complex phase = h / g;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  ComplexMatrix rot = ComplexMatrix::identity(a.dim());
  rot(p, p) = c;
  rot(p, q) = s;
  rot(q, p) = -s * std::conj(phase);
  rot(q, q) = c * std::conj(phase);

  a = rot.adjoint() * a * rot;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  v = v * rot;
}

}  // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  if (!is_hermitian(m, 1e-10)) throw DomainError("eig_hermitian: input is not Hermitian");
  if (!m.all_finite()) throw DomainError("eig_hermitian: input has non-finite entries");

  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm2(a);
    if (off == 0.0 || off <= 1e-34 * diagonal_norm2(a)) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace decoguard
