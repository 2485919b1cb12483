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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "entgeo/linalg.hpp"
#include "entgeo/states.hpp"
#include "oracles.hpp"

using namespace entgeo;

namespace {

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0, 1, 1, 0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1, 0, 0, -1}); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim() * b.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l)
          out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST_CASE("construction is exact and checks the entry count") {
  const std::vector<double> re{0.1, 0.2, 0.3, 0.4};
  const std::vector<double> im{0.0, -1.5, 1.5, 0.0};
  const auto m = ComplexMatrix::from_parts(2, re, im);
  CHECK(m(0, 1) == Complex(0.2, -1.5));
  CHECK(m(1, 0) == Complex(0.3, 1.5));
  CHECK_THROWS_AS(ComplexMatrix(3, std::vector<Complex>(8)), LinalgError);
  CHECK_THROWS_AS(ComplexMatrix::from_parts(2, re, std::vector<double>(3)), LinalgError);
}

TEST_CASE("hs_inner") {
  const auto i4 = ComplexMatrix::identity(4);
  CHECK(hs_inner(i4, i4) == Complex(4.0, 0.0));
  const auto i2 = ComplexMatrix::identity(2);
  CHECK(std::abs(hs_inner(kron(pauli_z(), i2), kron(pauli_x(), i2))) == 0.0);

  const auto w = make_named(NamedState::w_state).matrix();
  CHECK(std::abs(hs_inner(w, w) - 1.0) < 1e-14);
  // purity by an explicit product
  CHECK(std::abs((w * w).trace() - 1.0) < 1e-14);

  CHECK_THROWS_AS(hs_inner(i4, i2), DimensionMismatch);

  std::mt19937 gen(7);
  for (int k = 0; k < 20; ++k) {
    const auto a = oracle::random_hermitian(gen, 4) + ComplexMatrix(4, std::vector<Complex>(16, {0.0, 0.3}));
    const auto b = oracle::random_hermitian(gen, 4);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-14);
  }
}

TEST_CASE("hs_norm") {
  CHECK(hs_norm(ComplexMatrix(4)) == 0.0);
  CHECK(hs_norm(ComplexMatrix::identity(4) * 0.25) == doctest::Approx(0.5).epsilon(1e-15));

  std::mt19937 gen(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 50; ++k) {
    const auto a = oracle::random_hermitian(gen, 5);
    const auto b = oracle::random_hermitian(gen, 5);
    CHECK(hs_norm(a + b) <= hs_norm(a) + hs_norm(b) + 1e-14);
    const double s = u(gen);
    CHECK(hs_norm(a * s) == doctest::Approx(std::abs(s) * hs_norm(a)).epsilon(1e-13));
  }
}

TEST_CASE("eig_hermitian on a diagonal matrix") {
  const std::vector<double> diag{3.0, 1.0, 2.0};
  const auto e = eig_hermitian(ComplexMatrix::diagonal(diag));
  REQUIRE(e.eigenvalues.size() == 3);
  CHECK(e.eigenvalues[0] == 1.0);
  CHECK(e.eigenvalues[1] == 2.0);
  CHECK(e.eigenvalues[2] == 3.0);
  // a permutation matrix
  CHECK(std::abs(e.unitary(1, 0)) == 1.0);
  CHECK(std::abs(e.unitary(2, 1)) == 1.0);
  CHECK(std::abs(e.unitary(0, 2)) == 1.0);
}

TEST_CASE("eig_hermitian reproduces the W-state PT spectrum") {
  const auto rho = make_named(NamedState::w_state);
  const auto e = eig_hermitian(partial_transpose(rho));
  const double r2 = std::numbers::sqrt2;
  const std::vector<double> expected{-r2 / 3, 0, 0, 0, 0, 1.0 / 3, r2 / 3, 2.0 / 3};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(std::abs(e.eigenvalues[i] - expected[i]) < 1e-10);
}

TEST_CASE("eig_hermitian on the Bell psi+ partial transpose") {
  const auto e = eig_hermitian(partial_transpose(make_named(NamedState::bell_psi_plus)));
  const std::vector<double> expected{-0.5, 0.5, 0.5, 0.5};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(e.eigenvalues[i] - expected[i]) < 1e-14);
}

TEST_CASE("eig_hermitian invariants on random Hermitian matrices") {
  std::mt19937 gen(2026);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const double scale = trial % 4 == 0 ? 1e3 : (trial % 4 == 1 ? 1e-4 : 1.0);
      const auto a = oracle::random_hermitian(gen, n, scale);
      const auto e = eig_hermitian(a);
      CHECK(hs_norm(a - e.reconstruct()) <= 1e-10 * std::max(1.0, hs_norm(a)));
      CHECK(hs_norm(e.unitary.adjoint() * e.unitary - ComplexMatrix::identity(n)) <= 1e-10);
      CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));

      double sum_sq = 0.0;
      for (double d : e.eigenvalues) sum_sq += d * d;
      CHECK(sum_sq == doctest::Approx(hs_norm(a) * hs_norm(a)).epsilon(1e-12));

      // independent route for the smallest eigenvalue
      CHECK(std::abs(e.eigenvalues.front() - oracle::min_eig_bisection(a)) <
            1e-9 * std::max(1.0, scale));

      const auto again = eig_hermitian(a);
      CHECK(again.eigenvalues == e.eigenvalues);
    }
  }
}

TEST_CASE("eigenvalues of trace-1 states sum to the trace") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rho = sample_hs_random(8, seed);
    const auto values = eigvals_hermitian(rho.matrix());
    double sum = 0.0;
    for (double d : values) sum += d;
    CHECK(std::abs(sum - 1.0) <= 1e-12 * 8);
    CHECK(values == eig_hermitian(rho.matrix()).eigenvalues);
  }
}

TEST_CASE("degenerate spectra still reconstruct") {
  const auto rho = make_named(NamedState::max_mixed, 8);
  const auto e = eig_hermitian(rho.matrix());
  for (double d : e.eigenvalues) CHECK(d == 0.125);
  const auto w = make_named(NamedState::w_state).matrix();
  const auto ew = eig_hermitian(w);
  CHECK(hs_norm(w - ew.reconstruct()) < 1e-13);
}

TEST_CASE("non-Hermitian input is rejected with its asymmetry") {
  ComplexMatrix m = ComplexMatrix::identity(3);
  m(0, 1) = 0.5;
  try {
    (void)eig_hermitian(m, 1e-9);
    FAIL("expected NotHermitian");
  } catch (const NotHermitian& e) {
    CHECK(e.asymmetry() == doctest::Approx(std::sqrt(0.5)));
  }
  CHECK_THROWS_AS(is_psd(m), NotHermitian);

  // tiny asymmetry is symmetrized rather than rejected
  ComplexMatrix near = ComplexMatrix::identity(2);
  near(0, 1) = Complex(0.1, 1e-12);
  near(1, 0) = Complex(0.1, 0.0);
  const auto e = eig_hermitian(near, 1e-9);
  CHECK(e.eigenvalues[0] == doctest::Approx(0.9));
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ComplexMatrix::identity(4) * 0.25, 1e-10));
  CHECK_FALSE(is_psd(partial_transpose(make_named(NamedState::w_state)), 1e-10));
  CHECK(is_psd(ComplexMatrix::diagonal(std::vector<double>{-1e-12, 1.0}), 1e-10));
  CHECK_FALSE(is_psd(ComplexMatrix::diagonal(std::vector<double>{-1e-8, 1.0}), 1e-10));
}

TEST_CASE("determinant by LU matches the eigenvalue product") {
  std::mt19937 gen(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = oracle::random_hermitian(gen, n);
    double prod = 1.0;
    for (double d : eig_hermitian(a).eigenvalues) prod *= d;
    CHECK(std::abs(determinant(a) - prod) < 1e-12);
  }
  CHECK(determinant(ComplexMatrix(3)) == Complex(0.0));
}
