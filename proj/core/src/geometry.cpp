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

#include "entgeo/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "json.hpp"

namespace entgeo {

namespace {

constexpr double kDegenerateSpan = 1e-12;

ComplexMatrix max_mixed_matrix(std::size_t n) {
  return ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n));
}

double field_value(const CellRecord& c, ContourField field) {
  switch (field) {
    case ContourField::state_boundary: return c.min_eig;
    case ContourField::ppt_boundary: return c.min_eig_pt;
    case ContourField::negativity: return c.negativity;
  }
  return 0.0;
}

std::optional<std::uint64_t> parse_seed(std::string_view text) {
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return seed;
}

}  // namespace

Point2 Plane::coords_of(const ComplexMatrix& m) const {
  const ComplexMatrix offset = m - max_mixed_matrix(n());
  return {hs_inner(a1, offset).real(), hs_inner(a2, offset).real()};
}

Plane build_plane(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dims() != rho2.dims())
    throw GeometryError("build_plane: anchors have different bipartitions");
  const std::size_t n = rho1.dim();
  const ComplexMatrix center = max_mixed_matrix(n);

  ComplexMatrix u1 = rho1.matrix() - center;
  const double norm1 = hs_norm(u1);
  if (norm1 < kDegenerateSpan)
    throw GeometryError("build_plane: first anchor coincides with the maximally mixed state");
  u1 *= 1.0 / norm1;

  ComplexMatrix u2 = rho2.matrix() - center;
  u2 -= u1 * hs_inner(u1, u2).real();
  const double norm2 = hs_norm(u2);
  if (norm2 < kDegenerateSpan)
    throw GeometryError("build_plane: anchors span a degenerate plane (residual " +
                        std::to_string(norm2) + ")");
  u2 *= 1.0 / norm2;

  return Plane{rho1.dims(), rho1.matrix(), rho2.matrix(), std::move(u1), std::move(u2)};
}

ComplexMatrix state_at(const Plane& plane, double a, double b) {
  const std::size_t n = plane.n();
  ComplexMatrix m = max_mixed_matrix(n);
  for (std::size_t k = 0; k < m.size(); ++k)
    m.entries()[k] += a * plane.a1.entries()[k] + b * plane.a2.entries()[k];
  return m;
}

Plane make_named_plane(NamedPlane name) {
  const DensityMatrix rho1 = make_named(NamedState::bell_psi_plus);
  switch (name) {
    case NamedPlane::ff1: return build_plane(rho1, make_named(NamedState::ff1_rho2));
    case NamedPlane::ff2: return build_plane(rho1, make_named(NamedState::ff2_rho2));
    case NamedPlane::ff3: return build_plane(rho1, make_named(NamedState::ff3_rho2));
    case NamedPlane::ff4: return build_plane(rho1, make_named(NamedState::ff4_rho2));
    case NamedPlane::ff8: return build_plane(rho1, make_named(NamedState::ff8_rho2));
  }
  throw GeometryError("unknown named plane");
}

Plane make_random_plane(std::uint64_t seed) {
  HsSampler sampler(Dims{2, 2}, seed);
  const DensityMatrix rho1 = sampler.next();
  const DensityMatrix rho2 = sampler.next();
  return build_plane(rho1, rho2);
}

std::optional<Plane> plane_from_string(std::string_view spec) {
  if (spec == "ff1") return make_named_plane(NamedPlane::ff1);
  if (spec == "ff2") return make_named_plane(NamedPlane::ff2);
  if (spec == "ff3") return make_named_plane(NamedPlane::ff3);
  if (spec == "ff4") return make_named_plane(NamedPlane::ff4);
  if (spec == "ff8") return make_named_plane(NamedPlane::ff8);
  constexpr std::string_view kRandom = "random";
  if (!spec.starts_with(kRandom)) return std::nullopt;
  std::string_view rest = spec.substr(kRandom.size());
  if (rest.starts_with(':')) {
    rest.remove_prefix(1);
  } else if (rest.starts_with('(') && rest.ends_with(')')) {
    rest = rest.substr(1, rest.size() - 2);
  } else {
    return std::nullopt;
  }
  const auto seed = parse_seed(rest);
  if (!seed) return std::nullopt;
  return make_random_plane(*seed);
}

CellRecord evaluate_cell(const Plane& plane, double a, double b) {
  const ComplexMatrix m = state_at(plane, a, b);
  const std::vector<double> pt = eigvals_hermitian(partial_transpose(m, plane.dims));

  CellRecord out;
  out.min_eig = eigvals_hermitian(m).front();
  out.min_eig_pt = pt.front();
  if (plane.n() == 4) {
    out.negativity = out.min_eig_pt < -kMembershipTol ? -2.0 * out.min_eig_pt : 0.0;
  } else {
    for (double d : pt)
      if (d < -kMembershipTol) out.negativity -= 2.0 * d;
  }
  out.is_state = out.min_eig >= -kMembershipTol;
  out.is_ppt = out.is_state && out.min_eig_pt >= -kMembershipTol;
  return out;
}

ScanGrid scan_plane(const Plane& plane, const AxisRange& a_range, const AxisRange& b_range,
                    unsigned threads) {
  if (a_range.steps < 2 || b_range.steps < 2)
    throw GeometryError("scan_plane: each axis needs at least 2 steps");
  ScanGrid grid{plane, a_range, b_range,
                std::vector<CellRecord>(a_range.steps * b_range.steps)};

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, b_range.steps));

  // Rows are dealt round-robin; each worker writes only its own rows.
  const auto work = [&](unsigned worker) {
    for (std::size_t j = worker; j < b_range.steps; j += threads) {
      const double b = b_range.at(j);
      for (std::size_t i = 0; i < a_range.steps; ++i)
        grid.cells[j * a_range.steps + i] = evaluate_cell(plane, a_range.at(i), b);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return grid;
}

Contour boundary_contours(const ScanGrid& grid, ContourField field, double level) {
  const std::size_t nx = grid.a_range.steps;
  const std::size_t ny = grid.b_range.steps;
  std::vector<double> values(grid.cells.size());
  std::vector<double> state_field(grid.cells.size());
  for (std::size_t k = 0; k < grid.cells.size(); ++k) {
    values[k] = field_value(grid.cells[k], field);
    state_field[k] = grid.cells[k].min_eig;
  }

  Contour out;
  out.field = field;
  out.level = field == ContourField::negativity ? level : 0.0;

  const LatticeField lattice{nx, ny, values};
  std::optional<ContourClip> clip;
  if (field != ContourField::state_boundary)
    clip = ContourClip{LatticeField{nx, ny, state_field}, -kMembershipTol};

  const double da = grid.a_range.spacing();
  const double db = grid.b_range.spacing();
  for (Polyline& line : extract_isolines(lattice, out.level, clip)) {
    for (Point2& p : line) {
      p = Point2{grid.a_range.min + p.x * da, grid.b_range.min + p.y * db};
    }
    out.polylines.push_back(std::move(line));
  }
  return out;
}

std::string_view to_string(ContourField field) {
  switch (field) {
    case ContourField::state_boundary: return "state_boundary";
    case ContourField::ppt_boundary: return "ppt_boundary";
    case ContourField::negativity: return "negativity";
  }
  return "unknown";
}

void write_grid_csv(std::ostream& os, const ScanGrid& grid) {
  os << "a,b,min_eig,min_eig_pt,negativity,is_state,is_ppt\n";
  char line[256];
  for (std::size_t j = 0; j < grid.b_range.steps; ++j) {
    const double b = grid.b_range.at(j);
    for (std::size_t i = 0; i < grid.a_range.steps; ++i) {
      const CellRecord& c = grid.cell(i, j);
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d\n",
                    grid.a_range.at(i), b, c.min_eig, c.min_eig_pt, c.negativity,
                    c.is_state ? 1 : 0, c.is_ppt ? 1 : 0);
      os << line;
    }
  }
}

namespace {

nlohmann::json contour_document(const Contour& contour) {
  nlohmann::json lines = nlohmann::json::array();
  for (const Polyline& line : contour.polylines) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point2& p : line) pts.push_back({p.x, p.y});
    lines.push_back(std::move(pts));
  }
  nlohmann::json doc;
  doc["field"] = std::string(to_string(contour.field));
  doc["level"] = contour.level;
  doc["polylines"] = std::move(lines);
  return doc;
}

}  // namespace

std::string contour_to_json(const Contour& contour) { return contour_document(contour).dump(); }

std::string contours_to_json(std::span<const Contour> contours) {
  nlohmann::json all = nlohmann::json::array();
  for (const Contour& c : contours) all.push_back(contour_document(c));
  return all.dump();
}

}  // namespace entgeo
