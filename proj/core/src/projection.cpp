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

#include "entgeo/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entgeo {

namespace {

double pt_min_eigenvalue(const DensityMatrix& rho) {
  return eigvals_hermitian(partial_transpose(rho)).front();
}

}  // namespace

SimplexProjection project_simplex_psd(std::span<const double> d, double trace_target) {
  if (d.empty()) throw ProjectionError("project_simplex_psd: empty vector");
  if (!(trace_target > 0.0) || !std::isfinite(trace_target))
    throw ProjectionError("project_simplex_psd: trace_target must be positive");
  for (double v : d)
    if (!std::isfinite(v)) throw ProjectionError("project_simplex_psd: non-finite entry");

  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return d[i] > d[j]; });

  // Largest prefix of the descending order whose shifted entries stay positive.
  double prefix = 0.0;
  double support_sum = d[order[0]];
  std::size_t support = 1;
  for (std::size_t j = 0; j < order.size(); ++j) {
    prefix += d[order[j]];
    const double shift = (trace_target - prefix) / static_cast<double>(j + 1);
    if (d[order[j]] + shift > 0.0) {
      support = j + 1;
      support_sum = prefix;
    }
  }

  SimplexProjection out;
  out.lambda = (trace_target - support_sum) / static_cast<double>(support);
  out.e_squared.assign(d.size(), 0.0);
  for (std::size_t j = 0; j < support; ++j) {
    const std::size_t i = order[j];
    const double value = d[i] + out.lambda;
    if (value > 0.0) {
      out.e_squared[i] = value;
      out.kept.push_back(i);
    }
  }
  std::sort(out.kept.begin(), out.kept.end());
  return out;
}

double distance_closed_form(std::span<const double> d, std::span<const std::size_t> kept) {
  if (kept.empty()) throw ProjectionError("distance_closed_form: empty support (n_p = 0)");
  std::vector<bool> is_kept(d.size(), false);
  for (std::size_t i : kept) {
    if (i >= d.size()) throw ProjectionError("distance_closed_form: kept index out of range");
    is_kept[i] = true;
  }
  double dropped_sum = 0.0;   // sum over I_p and I_n
  double negative_sq = 0.0;   // sum over I_n of d_i^2
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0.0) {
      dropped_sum += d[i];
      negative_sq += d[i] * d[i];
    } else if (!is_kept[i]) {
      dropped_sum += d[i];
    }
  }
  const double np = static_cast<double>(kept.size());
  return std::sqrt(dropped_sum * dropped_sum / np + negative_sq);
}

ProjectionResult closest_pt_state(const DensityMatrix& rho, Subsystem sub) {
  const ComplexMatrix pt = partial_transpose(rho, sub);
  const EigenDecomposition eig = eig_hermitian(pt);
  const SimplexProjection proj = project_simplex_psd(eig.eigenvalues);
  const std::size_t n = rho.dim();

  ProjectionResult out;
  out.pt_eigenvalues = eig.eigenvalues;
  out.d_min = eig.eigenvalues.front();
  out.lambda = proj.lambda;
  out.kept_indices = proj.kept;
  out.e_squared.assign(proj.e_squared.rbegin(), proj.e_squared.rend());

  out.pt_projection = EigenDecomposition{proj.e_squared, eig.unitary}.reconstruct();
  out.closest_pt_state = partial_transpose(out.pt_projection, rho.dims(), sub);
  out.distance_exact = hs_norm(rho.matrix() - out.closest_pt_state);
  out.distance_closed_form = distance_closed_form(eig.eigenvalues, proj.kept);

  out.rho_s_min_eigenvalue = n == 0 ? 0.0 : eigvals_hermitian(out.closest_pt_state).front();
  out.rho_s_is_positive = out.rho_s_min_eigenvalue >= -kPsdTolerance;
  out.borderline = std::abs(out.rho_s_min_eigenvalue) <= kPsdTolerance;
  return out;
}

double negativity(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2})
    throw ProjectionError("negativity is defined for two qubits; use general_negativity");
  const double d_min = pt_min_eigenvalue(rho);
  return d_min >= -kPptThreshold ? 0.0 : -2.0 * d_min;
}

double general_negativity(const DensityMatrix& rho) {
  double sum = 0.0;
  for (double d : eigvals_hermitian(partial_transpose(rho)))
    if (d < -kPptThreshold) sum -= d;
  return sum;
}

double robustness_to_identity(const DensityMatrix& rho) {
  const double d_min = pt_min_eigenvalue(rho);
  if (d_min >= -kPptThreshold) return 0.0;
  const double magnitude = -d_min;
  return magnitude / (magnitude + 1.0 / static_cast<double>(rho.dim()));
}

TwoQubitDistance two_qubit_distance(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2})
    throw ProjectionError("two_qubit_distance requires dims (2,2)");
  const ProjectionResult proj = closest_pt_state(rho);
  TwoQubitDistance out;
  if (proj.d_min < -kPptThreshold) out.value = 2.0 / std::sqrt(3.0) * -proj.d_min;
  out.formula_applies = proj.rank() == 3;
  return out;
}

}  // namespace entgeo
