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

#include "entgeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace entgeo {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRelTol = 1e-14;

std::string mismatch_message(std::size_t lhs, std::size_t rhs) {
  std::ostringstream os;
  os << "dimension mismatch: " << lhs << " vs " << rhs;
  return os.str();
}

std::string asymmetry_message(double asymmetry, double tol) {
  std::ostringstream os;
  os << "matrix is not Hermitian: ||A - A^dagger||_2 = " << asymmetry
     << " exceeds tolerance " << tol;
  return os.str();
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

ComplexMatrix symmetrized(const ComplexMatrix& a, double tol) {
  const double asym = hermitian_asymmetry(a);
  if (asym > tol) throw NotHermitian(asym, tol);
  ComplexMatrix h(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

// Diagonalizes `work` in place. When `vectors` is non-null the rotations are
// accumulated into it (it must start as the identity).
void jacobi_diagonalize(ComplexMatrix& work, ComplexMatrix* vectors) {
  const std::size_t n = work.dim();
  const double scale = hs_norm(work);
  if (scale == 0.0) return;
  const double threshold = kOffDiagonalRelTol * scale;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(work) < threshold) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = work(p, q);
        const double h = std::abs(g);
        if (h == 0.0) continue;
        const Complex phase = std::conj(g / h);
        const double app = work(p, p).real();
        const double aqq = work(q, q).real();
        const double zeta = (aqq - app) / (2.0 * h);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J restricted to (p, q): [[c, s], [-s*phase, c*phase]].
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * phase;
        const Complex jqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = work(k, p);
          const Complex akq = work(k, q);
          work(k, p) = akp * jpp + akq * jqp;
          work(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = work(p, k);
          const Complex aqk = work(q, k);
          work(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          work(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        work(p, q) = 0.0;
        work(q, p) = 0.0;
        work(p, p) = work(p, p).real();
        work(q, q) = work(q, q).real();

        if (vectors != nullptr) {
          ComplexMatrix& v = *vectors;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * jpp + vkq * jqp;
            v(k, q) = vkp * jpq + vkq * jqq;
          }
        }
      }
    }
  }
}

std::vector<std::size_t> ascending_order(const ComplexMatrix& diag_form) {
  std::vector<std::size_t> order(diag_form.dim());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return diag_form(i, i).real() < diag_form(j, j).real();
  });
  return order;
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : LinalgError(mismatch_message(lhs, rhs)) {}

NotHermitian::NotHermitian(double asymmetry, double tol)
    : LinalgError(asymmetry_message(asymmetry, tol)), asymmetry_(asymmetry) {}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw LinalgError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                      " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::from_parts(std::size_t dim, std::span<const double> re,
                                        std::span<const double> im) {
  if (re.size() != dim * dim || im.size() != dim * dim) {
    throw LinalgError("ComplexMatrix::from_parts: part sizes do not match dim^2");
  }
  std::vector<Complex> entries(dim * dim);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = Complex(re[k], im[k]);
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  return out;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  Complex sum = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) sum += std::conj(ea[k]) * eb[k];
  return sum;
}

double hs_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& e : a.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

double hermitian_asymmetry(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      sum += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += unitary(i, k) * eigenvalues[k] * std::conj(unitary(j, k));
      out(i, j) = sum;
    }
  return out;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& a, double tol) {
  ComplexMatrix work = symmetrized(a, tol);
  ComplexMatrix vectors = ComplexMatrix::identity(a.dim());
  jacobi_diagonalize(work, &vectors);

  const auto order = ascending_order(work);
  EigenDecomposition out{std::vector<double>(a.dim()), ComplexMatrix(a.dim())};
  for (std::size_t col = 0; col < order.size(); ++col) {
    out.eigenvalues[col] = work(order[col], order[col]).real();
    for (std::size_t row = 0; row < a.dim(); ++row)
      out.unitary(row, col) = vectors(row, order[col]);
  }
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& a, double tol) {
  ComplexMatrix work = symmetrized(a, tol);
  jacobi_diagonalize(work, nullptr);
  std::vector<double> values(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) values[i] = work(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (a.dim() == 0) return true;
  return eigvals_hermitian(a, tol).front() >= -tol;
}

Complex determinant(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix lu = a;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::abs(lu(row, col)) > std::abs(lu(pivot, col))) pivot = row;
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(lu(pivot, k), lu(col, k));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t row = col + 1; row < n; ++row) {
      const Complex factor = lu(row, col) / lu(col, col);
      for (std::size_t k = col; k < n; ++k) lu(row, k) -= factor * lu(col, k);
    }
  }
  return det;
}

}  // namespace entgeo
