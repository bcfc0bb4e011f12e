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
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace decoguard {

using Complex = std::complex<double>;

/// Square complex matrix of dimension 2 (one qubit) or 4 (two qubits),
/// stored row-major in a fixed 4x4 buffer.
class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  ComplexMatrix() : ComplexMatrix(2) {}
  /// Zero matrix. Throws DomainError unless dim is 2 or 4.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; the list length must be dim*dim.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  /// |v><w| for column vectors of length dim.
  static ComplexMatrix outer(const Complex* v, const Complex* w, std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * kMaxDim + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * kMaxDim + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of two 2x2 matrices in basis order 00, 01, 10, 11.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// U rho U^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& rho);

/// True when m equals its adjoint within tol entrywise.
bool is_hermitian(const ComplexMatrix& m, double tol);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace decoguard
