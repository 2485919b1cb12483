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

#ifndef ENTGEO_CONTOUR_HPP
#define ENTGEO_CONTOUR_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace entgeo {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

using Polyline = std::vector<Point2>;

/// Node values of a regular nx by ny lattice, index j * nx + i.
struct LatticeField {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::span<const double> values;

  double at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }
};

/// Only segments whose two endpoints have `field >= min_value` (linearly
/// interpolated along the same lattice edge) survive.
struct ContourClip {
  LatticeField field;
  double min_value = 0.0;
};

/// Marching squares for the iso-line `field == level`, nodes with
/// value >= level counting as inside. Saddle cells are split according to the
/// mean of their four corners. Points are in lattice coordinates (i + t, j) or
/// (i, j + t); segments sharing a lattice edge are chained, so closed curves
/// repeat their first point at the end.
std::vector<Polyline> extract_isolines(const LatticeField& field, double level,
                                       const std::optional<ContourClip>& clip = std::nullopt);

}  // namespace entgeo

#endif  // ENTGEO_CONTOUR_HPP
