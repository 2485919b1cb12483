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

#ifndef ENTGEO_GEOMETRY_HPP
#define ENTGEO_GEOMETRY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entgeo/contour.hpp"
#include "entgeo/linalg.hpp"
#include "entgeo/states.hpp"

namespace entgeo {

/// Membership threshold for both the state body and the PPT body.
inline constexpr double kMembershipTol = 1e-10;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Affine plane I/n + a*A1 + b*A2 through the maximally mixed state. A1 and
/// A2 are traceless, Hermitian and orthonormal under tr(A^dagger B).
struct Plane {
  Dims dims;
  ComplexMatrix anchor1;
  ComplexMatrix anchor2;
  ComplexMatrix a1;
  ComplexMatrix a2;

  std::size_t n() const noexcept { return dims.total(); }
  /// Orthogonal projection of m - I/n onto (A1, A2).
  Point2 coords_of(const ComplexMatrix& m) const;
};

/// Gram-Schmidt on rho1 - I/n and rho2 - I/n. Throws GeometryError when the
/// two directions are (numerically) dependent.
Plane build_plane(const DensityMatrix& rho1, const DensityMatrix& rho2);

ComplexMatrix state_at(const Plane& plane, double a, double b);

enum class NamedPlane { ff1, ff2, ff3, ff4, ff8 };

/// Bell psi+ paired with the second anchor of the named plane.
Plane make_named_plane(NamedPlane name);
/// Two HS-random two-qubit anchors drawn from one sampler.
Plane make_random_plane(std::uint64_t seed);
/// "ff1".."ff8" or "random(SEED)" / "random:SEED".
std::optional<Plane> plane_from_string(std::string_view spec);

struct AxisRange {
  double min = -0.9;
  double max = 0.9;
  std::size_t steps = 401;

  double at(std::size_t k) const {
    return min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  double spacing() const { return (max - min) / static_cast<double>(steps - 1); }
};

struct CellRecord {
  double min_eig = 0.0;
  double min_eig_pt = 0.0;
  double negativity = 0.0;
  bool is_state = false;
  bool is_ppt = false;
};

CellRecord evaluate_cell(const Plane& plane, double a, double b);

/// Cells are stored with a varying fastest: index = j_b * a_range.steps + i_a.
struct ScanGrid {
  Plane plane;
  AxisRange a_range;
  AxisRange b_range;
  std::vector<CellRecord> cells;

  const CellRecord& cell(std::size_t ia, std::size_t jb) const {
    return cells[jb * a_range.steps + ia];
  }
};

/// `threads == 0` uses the hardware concurrency. Output does not depend on it.
ScanGrid scan_plane(const Plane& plane, const AxisRange& a_range, const AxisRange& b_range,
                    unsigned threads = 1);

enum class ContourField { state_boundary, ppt_boundary, negativity };

/// Polylines in (a, b) coordinates.
struct Contour {
  ContourField field = ContourField::state_boundary;
  double level = 0.0;
  std::vector<Polyline> polylines;
};

/// state_boundary: min_eig = 0 over the whole grid. ppt_boundary:
/// min_eig_pt = 0, and negativity: negativity = level, both kept only where
/// the interpolated min_eig is >= -kMembershipTol. `level` is ignored for the
/// two boundaries.
Contour boundary_contours(const ScanGrid& grid, ContourField field, double level = 0.0);

std::string_view to_string(ContourField field);

/// Header `a,b,min_eig,min_eig_pt,negativity,is_state,is_ppt`, one row per
/// cell in storage order, doubles with 17 significant digits.
void write_grid_csv(std::ostream& os, const ScanGrid& grid);

/// {"field":..., "level":..., "polylines":[[[a,b],...],...]}
std::string contour_to_json(const Contour& contour);
/// JSON array of contour documents.
std::string contours_to_json(std::span<const Contour> contours);

}  // namespace entgeo

#endif  // ENTGEO_GEOMETRY_HPP
