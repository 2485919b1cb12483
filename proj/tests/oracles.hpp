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

// Test-only reference routines. None of these call into the code paths they
// are used to check.

#ifndef ENTGEO_TESTS_ORACLES_HPP
#define ENTGEO_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "entgeo/contour.hpp"
#include "entgeo/linalg.hpp"

namespace entgeo::oracle {

struct SimplexCandidate {
  std::vector<std::size_t> support;
  double lambda = 0.0;
  std::vector<double> x;
  double distance = std::numeric_limits<double>::infinity();
};

/// Enumerates every nonempty support set S, shifts d on S so the entries sum
/// to the target, discards candidates with a negative entry, and returns the
/// feasible candidate nearest to d.
inline SimplexCandidate brute_force_simplex(const std::vector<double>& d, double target = 1.0) {
  const std::size_t n = d.size();
  SimplexCandidate best;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) {
        sum += d[i];
        ++count;
      }
    const double lambda = (target - sum) / static_cast<double>(count);
    std::vector<double> x(n, 0.0);
    bool feasible = true;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) {
        x[i] = d[i] + lambda;
        if (x[i] < 0.0) feasible = false;
      }
    if (!feasible) continue;
    double dist = 0.0;
    for (std::size_t i = 0; i < n; ++i) dist += (x[i] - d[i]) * (x[i] - d[i]);
    dist = std::sqrt(dist);
    if (dist < best.distance) {
      best.distance = dist;
      best.lambda = lambda;
      best.x = x;
      best.support.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] > 0.0) best.support.push_back(i);
    }
  }
  return best;
}

/// Partial transpose on the second factor as sum_{k,l} (I (x) |k><l|) M (I (x) |k><l|).
inline ComplexMatrix pt_by_products(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out(m.dim());
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l) {
      ComplexMatrix lift(m.dim());
      for (std::size_t a = 0; a < da; ++a) lift(a * db + k, a * db + l) = 1.0;
      out += lift * m * lift;
    }
  return out;
}

/// Smallest eigenvalue by bisection on the inertia of A - x I (Sylvester's
/// law via unpivoted elimination), bracketed by the Gershgorin bound.
inline double min_eig_bisection(const ComplexMatrix& a) {
  double bound = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) row += std::abs(a(i, j));
    bound = std::max(bound, row);
  }
  const auto below = [&](double x) {
    const std::size_t n = a.dim();
    std::vector<std::complex<double>> m(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] -= x;
    int negatives = 0;
    for (std::size_t k = 0; k < n; ++k) {
      double pivot = m[k * n + k].real();
      if (pivot == 0.0) pivot = 1e-300;
      if (pivot < 0.0) ++negatives;
      for (std::size_t i = k + 1; i < n; ++i) {
        const std::complex<double> f = m[i * n + k] / pivot;
        for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
      }
    }
    return negatives;
  };
  double lo = -bound - 1.0, hi = bound + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (below(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

/// HS-random state from a different engine and distribution implementation.
inline ComplexMatrix independent_hs_state(std::mt19937& gen, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n);
  for (auto& e : g.entries()) e = {normal(gen), normal(gen)};
  ComplexMatrix rho(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += g(i, k) * std::conj(g(j, k));
      rho(i, j) = s;
    }
  double tr = 0.0;
  for (std::size_t i = 0; i < n; ++i) tr += rho(i, i).real();
  rho *= 1.0 / tr;
  return rho;
}

/// Random Hermitian matrix with entries of order `scale`.
inline ComplexMatrix random_hermitian(std::mt19937& gen, std::size_t n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = u(gen);
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = {u(gen), u(gen)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

// --- planar helpers --------------------------------------------------------

/// Largest perpendicular distance from the total-least-squares line.
inline double max_line_deviation(const Polyline& pts) {
  if (pts.size() < 3) return 0.0;
  double mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : pts) {
    sxx += (p.x - mx) * (p.x - mx);
    sxy += (p.x - mx) * (p.y - my);
    syy += (p.y - my) * (p.y - my);
  }
  const double angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  const double nx = -std::sin(angle), ny = std::cos(angle);
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, std::abs((p.x - mx) * nx + (p.y - my) * ny));
  return worst;
}

inline double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 == 0.0 ? 0.0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

inline double distance_to_polylines(Point2 p, const std::vector<Polyline>& lines) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& line : lines) {
    if (line.size() == 1) best = std::min(best, std::hypot(p.x - line[0].x, p.y - line[0].y));
    for (std::size_t k = 0; k + 1 < line.size(); ++k)
      best = std::min(best, point_segment_distance(p, line[k], line[k + 1]));
  }
  return best;
}

/// Andrew's monotone chain; returns the hull counter-clockwise, not closed.
inline Polyline convex_hull(Polyline pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  const auto cross = [](Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  Polyline hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace entgeo::oracle

#endif  // ENTGEO_TESTS_ORACLES_HPP
