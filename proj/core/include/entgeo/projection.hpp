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

#ifndef ENTGEO_PROJECTION_HPP
#define ENTGEO_PROJECTION_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "entgeo/linalg.hpp"
#include "entgeo/states.hpp"

namespace entgeo {

/// d_min at or above this counts as PPT.
inline constexpr double kPptThreshold = 1e-10;
/// Absolute tolerance on the min eigenvalue of rho_s for the positivity flag.
inline constexpr double kPsdTolerance = 1e-9;

class ProjectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Euclidean projection of a real vector onto {x >= 0, sum x = trace_target}.
struct SimplexProjection {
  std::vector<double> e_squared;  ///< aligned with the input vector
  double lambda = 0.0;            ///< e_i = max(d_i + lambda, 0)
  std::vector<std::size_t> kept;  ///< ascending indices with d_i + lambda > 0
};

SimplexProjection project_simplex_psd(std::span<const double> d, double trace_target = 1.0);

/// Distance from the negative eigenvalues and the dropped nonnegative ones,
/// sqrt((sum_{I_p} d + sum_{I_n} d)^2 / n_p + sum_{I_n} d^2). Matches the
/// exact residual only when every dropped nonnegative eigenvalue is zero.
double distance_closed_form(std::span<const double> d, std::span<const std::size_t> kept);

/// Closest partially transposed state to rho and its diagnostics.
///
/// `pt_eigenvalues` are the ascending eigenvalues of rho^PT and `kept_indices`
/// index into them. `e_squared` is sorted descending, so e_squared[k] belongs
/// to pt_eigenvalues[n - 1 - k].
struct ProjectionResult {
  ComplexMatrix closest_pt_state;  ///< rho_s = (U E^2 U^dagger)^PT
  ComplexMatrix pt_projection;     ///< U E^2 U^dagger, the PSD point in PT space
  std::vector<double> pt_eigenvalues;
  std::vector<double> e_squared;
  double lambda = 0.0;
  std::vector<std::size_t> kept_indices;
  double distance_exact = 0.0;
  double distance_closed_form = 0.0;
  bool rho_s_is_positive = false;
  /// min eigenvalue of rho_s lies within kPsdTolerance of zero.
  bool borderline = false;
  double rho_s_min_eigenvalue = 0.0;
  double d_min = 0.0;

  std::size_t rank() const noexcept { return kept_indices.size(); }
};

ProjectionResult closest_pt_state(const DensityMatrix& rho, Subsystem sub = Subsystem::B);

/// 2 |d_min| for two qubits (0 when PPT). Throws for dims other than (2,2).
double negativity(const DensityMatrix& rho);

/// Sum of |d_i| over the negative eigenvalues of rho^PT; any bipartition.
double general_negativity(const DensityMatrix& rho);

/// Smallest t with (1 - t) rho^PT + (t/n) I >= 0, i.e. |d_min| / (|d_min| + 1/n).
double robustness_to_identity(const DensityMatrix& rho);

struct TwoQubitDistance {
  double value = 0.0;            ///< (2/sqrt 3) |d_min|
  bool formula_applies = false;  ///< the projection keeps exactly three eigenvalues
};

TwoQubitDistance two_qubit_distance(const DensityMatrix& rho);

}  // namespace entgeo

#endif  // ENTGEO_PROJECTION_HPP
