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

#include "entgeo/contour.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace entgeo {

namespace {

// Lattice edge id: horizontal edges join (i,j)-(i+1,j), vertical ones
// (i,j)-(i,j+1).
struct EdgeHit {
  std::uint64_t key;
  Point2 point;
};

struct Segment {
  std::array<EdgeHit, 2> ends;
};

enum Edge { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };

// Edge pairs per corner configuration; bit 0 = (i,j), bit 1 = (i+1,j),
// bit 2 = (i+1,j+1), bit 3 = (i,j+1). Saddles (5, 10) are handled separately.
constexpr std::array<std::array<int, 2>, 16> kCases{{
    {-1, -1}, {kLeft, kBottom}, {kBottom, kRight}, {kLeft, kRight},
    {kRight, kTop}, {-1, -1}, {kBottom, kTop}, {kTop, kLeft},
    {kTop, kLeft}, {kBottom, kTop}, {-1, -1}, {kRight, kTop},
    {kRight, kLeft}, {kBottom, kRight}, {kLeft, kBottom}, {-1, -1},
}};

class Extractor {
 public:
  Extractor(const LatticeField& field, double level, const std::optional<ContourClip>& clip)
      : field_(field), level_(level), clip_(clip) {}

  std::vector<Polyline> run() {
    for (std::size_t j = 0; j + 1 < field_.ny; ++j)
      for (std::size_t i = 0; i + 1 < field_.nx; ++i) visit_cell(i, j);
    return chain();
  }

 private:
  bool inside(std::size_t i, std::size_t j) const { return field_.at(i, j) >= level_; }

  // Crossing on the given edge of cell (i, j); returns false if clipped.
  bool hit(std::size_t i, std::size_t j, int edge, EdgeHit& out) const {
    std::size_t i0 = i, j0 = j, i1 = i, j1 = j;
    bool horizontal = true;
    switch (edge) {
      case kBottom: i1 = i + 1; break;
      case kTop: j0 = j1 = j + 1; i1 = i + 1; break;
      case kLeft: j1 = j + 1; horizontal = false; break;
      case kRight: i0 = i1 = i + 1; j1 = j + 1; horizontal = false; break;
      default: throw std::logic_error("bad edge");
    }
    const double v0 = field_.at(i0, j0);
    const double v1 = field_.at(i1, j1);
    const double t = v1 == v0 ? 0.5 : (level_ - v0) / (v1 - v0);
    if (clip_) {
      const double c0 = clip_->field.at(i0, j0);
      const double c1 = clip_->field.at(i1, j1);
      if (c0 + t * (c1 - c0) < clip_->min_value) return false;
    }
    out.key = (static_cast<std::uint64_t>(j0 * field_.nx + i0) << 1) | (horizontal ? 0u : 1u);
    out.point = horizontal ? Point2{static_cast<double>(i0) + t, static_cast<double>(j0)}
                           : Point2{static_cast<double>(i0), static_cast<double>(j0) + t};
    return true;
  }

  void add(std::size_t i, std::size_t j, int e0, int e1) {
    Segment s;
    if (!hit(i, j, e0, s.ends[0]) || !hit(i, j, e1, s.ends[1])) return;
    segments_.push_back(s);
  }

  void visit_cell(std::size_t i, std::size_t j) {
    const int config = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) |
                       (inside(i + 1, j + 1) ? 4 : 0) | (inside(i, j + 1) ? 8 : 0);
    if (config == 0 || config == 15) return;
    if (config == 5 || config == 10) {
      const double center = 0.25 * (field_.at(i, j) + field_.at(i + 1, j) +
                                     field_.at(i + 1, j + 1) + field_.at(i, j + 1));
      const bool center_inside = center >= level_;
      // Cut off the corners that disagree with the center.
      if ((config == 5) == center_inside) {
        add(i, j, kBottom, kRight);
        add(i, j, kTop, kLeft);
      } else {
        add(i, j, kLeft, kBottom);
        add(i, j, kRight, kTop);
      }
      return;
    }
    add(i, j, kCases[config][0], kCases[config][1]);
  }

  std::vector<Polyline> chain() {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_edge;
    for (std::size_t s = 0; s < segments_.size(); ++s)
      for (const auto& end : segments_[s].ends) by_edge[end.key].push_back(s);

    std::vector<bool> used(segments_.size(), false);
    std::vector<Polyline> lines;

    const auto walk = [&](std::size_t seg, int entry) {
      Polyline line{segments_[seg].ends[entry].point};
      for (;;) {
        used[seg] = true;
        const EdgeHit& exit = segments_[seg].ends[1 - entry];
        line.push_back(exit.point);
        std::size_t next = segments_.size();
        for (std::size_t cand : by_edge[exit.key])
          if (!used[cand]) next = cand;
        if (next == segments_.size()) break;
        entry = segments_[next].ends[0].key == exit.key ? 0 : 1;
        seg = next;
      }
      lines.push_back(std::move(line));
    };

    // Open chains first, starting from an end that no other segment shares.
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (used[s]) continue;
      for (int e = 0; e < 2; ++e) {
        if (by_edge[segments_[s].ends[e].key].size() == 1) {
          walk(s, e);
          break;
        }
      }
    }
    for (std::size_t s = 0; s < segments_.size(); ++s)
      if (!used[s]) walk(s, 0);
    return lines;
  }

  const LatticeField& field_;
  double level_;
  const std::optional<ContourClip>& clip_;
  std::vector<Segment> segments_;
};

}  // namespace

std::vector<Polyline> extract_isolines(const LatticeField& field, double level,
                                       const std::optional<ContourClip>& clip) {
  if (field.values.size() != field.nx * field.ny)
    throw std::invalid_argument("extract_isolines: value count does not match nx * ny");
  if (clip && (clip->field.nx != field.nx || clip->field.ny != field.ny))
    throw std::invalid_argument("extract_isolines: clip field shape differs");
  if (field.nx < 2 || field.ny < 2) return {};
  return Extractor(field, level, clip).run();
}

}  // namespace entgeo
