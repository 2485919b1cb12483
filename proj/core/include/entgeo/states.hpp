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

#ifndef ENTGEO_STATES_HPP
#define ENTGEO_STATES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "entgeo/linalg.hpp"

namespace entgeo {

/// Bipartition of the Hilbert space into factors of dimensions a and b.
/// A composite basis index is a * b_dim + b.
struct Dims {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t total() const noexcept { return a * b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Subsystem { A, B };

class StateError : public std::runtime_error {
 public:
  enum class Kind { bad_dims, not_hermitian, bad_trace, not_psd, malformed, unknown_name };

  StateError(Kind kind, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(what), kind_(kind), magnitude_(magnitude) {}

  Kind kind() const noexcept { return kind_; }
  /// Size of the violation (asymmetry, |trace - 1|, or min eigenvalue).
  double magnitude() const noexcept { return magnitude_; }

 private:
  Kind kind_;
  double magnitude_;
};

/// A validated state: Hermitian, unit trace, positive semidefinite, with a
/// bipartition matching its dimension. Only validate_state constructs one.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Dims dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  friend DensityMatrix validate_state(const ComplexMatrix& m, Dims dims, double tol);

 private:
  DensityMatrix(ComplexMatrix m, Dims dims) : matrix_(std::move(m)), dims_(dims) {}

  ComplexMatrix matrix_;
  Dims dims_;
};

/// Checks Hermiticity, then trace, then positivity; the first failure throws a
/// StateError of the matching kind. Hermitian inputs are stored as given.
DensityMatrix validate_state(const ComplexMatrix& m, Dims dims, double tol = kDefaultTol);

/// Partial transpose of a raw operator on the given factor.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem sub = Subsystem::B);
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem sub = Subsystem::B);

enum class NamedState {
  w_state,              ///< (|001> + |010> + |100>)/sqrt(3), dims (2,4)
  bell_psi_plus,        ///< (|01> + |10>)/sqrt(2)
  bell_psi_minus_like,  ///< (|01> - |10>)/sqrt(2)
  ff1_rho2,             ///< |00><00|
  ff2_rho2,             ///< |0+><0+|
  ff3_rho2,             ///< |01><01|
  ff4_rho2,             ///< (10|00> + |11>)/sqrt(101)
  ff8_rho2,             ///< same as bell_psi_minus_like
  quasi_distillable,    ///< rank-2 mixture of Bell psi- and |11>
  max_mixed,            ///< I/n
};

/// `n` is only used by max_mixed; it must factor as 2 x (n/2).
DensityMatrix make_named(NamedState name, std::size_t n = 4);

/// CLI spelling ("w", "bell-psi-plus", "max-mixed8", ...) to a state.
std::optional<DensityMatrix> named_from_string(std::string_view name);

/// Hilbert-Schmidt-random states rho = G G^dagger / tr(G G^dagger), G square
/// Ginibre. Gaussians come from Box-Muller on mt19937_64 uniforms, so a seed
/// pins the stream on every platform.
class HsSampler {
 public:
  HsSampler(Dims dims, std::uint64_t seed);

  DensityMatrix next();

 private:
  double uniform_open();
  double standard_normal();

  Dims dims_;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// One state from a freshly seeded sampler; n must be even (dims (2, n/2)).
DensityMatrix sample_hs_random(std::size_t n, std::uint64_t seed);

/// Schema: {"dims":[dA,dB],"matrix":[[[re,im],...],...]}.
std::string state_to_json(const DensityMatrix& rho);
std::string matrix_to_json(const ComplexMatrix& m, Dims dims);
DensityMatrix state_from_json(std::string_view text, double tol = kDefaultTol);

}  // namespace entgeo

#endif  // ENTGEO_STATES_HPP
