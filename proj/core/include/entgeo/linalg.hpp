// Copyright 2026 The entgeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTGEO_LINALG_HPP
#define ENTGEO_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace entgeo {

using Complex = std::complex<double>;

/// Tolerance used wherever a tolerance argument is optional.
inline constexpr double kDefaultTol = 1e-9;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public LinalgError {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs);
};

/// Raised by the Hermitian routines when ||A - A^dagger||_2 exceeds the
/// caller's tolerance. The measured asymmetry is kept for diagnostics.
class NotHermitian : public LinalgError {
 public:
  NotHermitian(double asymmetry, double tol);
  double asymmetry() const noexcept { return asymmetry_; }

 private:
  double asymmetry_;
};

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix from_parts(std::size_t dim, std::span<const double> re,
                                  std::span<const double> im);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><v| for an arbitrary (not necessarily normalized) vector.
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_norm(const ComplexMatrix& a);

/// ||A - A^dagger||_2.
double hermitian_asymmetry(const ComplexMatrix& a);

/// Largest entrywise modulus of A - B.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// A = U diag(eigenvalues) U^dagger with eigenvalues ascending.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix unitary;

  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Inputs with asymmetry <= tol are symmetrized as
/// (A + A^dagger)/2 first; anything larger throws NotHermitian. Equal
/// eigenvalues keep the order in which they appear on the converged diagonal.
EigenDecomposition eig_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

/// Eigenvalues only (ascending); skips accumulating the rotations.
std::vector<double> eigvals_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

bool is_psd(const ComplexMatrix& a, double tol = kDefaultTol);

/// Determinant by LU with partial pivoting. Independent of the eigensolver.
Complex determinant(const ComplexMatrix& a);

}  // namespace entgeo

#endif  // ENTGEO_LINALG_HPP
