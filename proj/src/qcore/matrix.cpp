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

#include "decoguard/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "decoguard/error.hpp"

namespace decoguard {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  if (dim != 2 && dim != 4) {
    throw DomainError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim) {
  if (entries.size() != dim * dim) {
    throw DomainError("expected " + std::to_string(dim * dim) + " entries, got " +
                      std::to_string(entries.size()));
  }
  auto it = entries.begin();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      (*this)(i, j) = *it++;
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  ComplexMatrix m(diag.size());
  std::size_t i = 0;
  for (const Complex& d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::outer(const Complex* v, const Complex* w, std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m(i, j) = v[i] * std::conj(w[j]);
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      m(i, j) = std::conj((*this)(j, i));
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      m(i, j) = std::conj((*this)(i, j));
    }
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Complex& z = (*this)(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DomainError("dimension mismatch in matrix sum");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) += other(i, j);
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DomainError("dimension mismatch in matrix difference");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) -= other(i, j);
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) *= scale;
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("dimension mismatch in matrix product");
  const std::size_t n = a.dim_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("dimension mismatch in max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw DomainError("tensor product is defined for 2x2 factors only");
  }
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * u.adjoint();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

namespace pauli {
ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

}  // namespace decoguard
