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
#include <vector>

#include "entgeo/contour.hpp"
#include "oracles.hpp"

using namespace entgeo;

namespace {

std::vector<double> sample(std::size_t nx, std::size_t ny, auto&& f) {
  std::vector<double> v(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) v[j * nx + i] = f(static_cast<double>(i), static_cast<double>(j));
  return v;
}

}  // namespace

TEST_CASE("a disc gives one closed curve on the circle") {
  const std::size_t n = 41;
  const auto v = sample(n, n, [](double x, double y) {
    return 15.0 * 15.0 - (x - 20) * (x - 20) - (y - 20) * (y - 20);
  });
  const auto lines = extract_isolines(LatticeField{n, n, v}, 0.0);
  REQUIRE(lines.size() == 1);
  const auto& ring = lines[0];
  CHECK(ring.size() > 20);
  CHECK(ring.front().x == ring.back().x);
  CHECK(ring.front().y == ring.back().y);
  for (const auto& p : ring) CHECK(std::hypot(p.x - 20, p.y - 20) == doctest::Approx(15.0).epsilon(0.01));
}

TEST_CASE("a linear field gives one straight open line") {
  const std::size_t n = 30;
  const auto v = sample(n, n, [](double x, double y) { return 0.3 * x - 0.7 * y + 2.0; });
  const auto lines = extract_isolines(LatticeField{n, n, v}, 1.0);
  REQUIRE(lines.size() == 1);
  CHECK(oracle::max_line_deviation(lines[0]) < 1e-9);
  for (const auto& p : lines[0]) CHECK(0.3 * p.x - 0.7 * p.y + 2.0 == doctest::Approx(1.0));
}

TEST_CASE("saddle cells follow the center value") {
  // corners (0,0) and (1,1) inside; storage is j * nx + i
  // mean 0.25 >= 0: center inside, two segments cutting off the outside corners
  const std::vector<double> joined{1.5, -1.0, -1.0, 1.5};
  auto lines = extract_isolines(LatticeField{2, 2, joined}, 0.0);
  REQUIRE(lines.size() == 2);
  for (const auto& l : lines) {
    const bool near_bottom_right = l[0].x + l[1].x > 1.0 && l[0].y + l[1].y < 1.0;
    const bool near_top_left = l[0].x + l[1].x < 1.0 && l[0].y + l[1].y > 1.0;
    CHECK((near_bottom_right || near_top_left));
  }
  const std::vector<double> split{0.5, -1.0, -1.0, 0.5};
  lines = extract_isolines(LatticeField{2, 2, split}, 0.0);
  REQUIRE(lines.size() == 2);
  for (const auto& l : lines) {
    const bool near_bottom_left = l[0].x + l[1].x < 1.0 && l[0].y + l[1].y < 1.0;
    const bool near_top_right = l[0].x + l[1].x > 1.0 && l[0].y + l[1].y > 1.0;
    CHECK((near_bottom_left || near_top_right));
  }
}

TEST_CASE("clipping drops segments outside the clip region") {
  const std::size_t n = 21;
  const auto v = sample(n, n, [](double x, double) { return x - 10.0; });
  const auto clip = sample(n, n, [](double, double y) { return 10.0 - y; });
  const auto all = extract_isolines(LatticeField{n, n, v}, 0.0);
  const auto clipped = extract_isolines(LatticeField{n, n, v}, 0.0,
                                        ContourClip{LatticeField{n, n, clip}, 0.0});
  REQUIRE(all.size() == 1);
  REQUIRE(clipped.size() == 1);
  CHECK(all[0].size() == 21);
  for (const auto& p : clipped[0]) CHECK(p.y <= 10.0);
  CHECK(clipped[0].size() == 11);
}

TEST_CASE("fields without a crossing yield nothing") {
  const std::vector<double> flat(16, 1.0);
  CHECK(extract_isolines(LatticeField{4, 4, flat}, 2.0).empty());
  CHECK(extract_isolines(LatticeField{4, 4, flat}, 0.0).empty());
  CHECK(extract_isolines(LatticeField{1, 16, flat}, 0.0).empty());
  CHECK_THROWS_AS(extract_isolines(LatticeField{5, 4, flat}, 0.0), std::invalid_argument);
}

TEST_CASE("two separate blobs give two closed curves") {
  const std::size_t n = 50;
  const auto v = sample(n, n, [](double x, double y) {
    const double a = 36.0 - (x - 12) * (x - 12) - (y - 12) * (y - 12);
    const double b = 36.0 - (x - 35) * (x - 35) - (y - 30) * (y - 30);
    return std::max(a, b);
  });
  const auto lines = extract_isolines(LatticeField{n, n, v}, 0.0);
  CHECK(lines.size() == 2);
  for (const auto& l : lines) {
    CHECK(l.front().x == l.back().x);
    CHECK(l.front().y == l.back().y);
  }
}
