// Copyright 2026 The bgtex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bgtex/pixel_mask.hpp"

#include <algorithm>
#include <vector>

namespace bgtex {
namespace {

struct Range {
  int lo = 0;
  int hi = -1;  // inclusive; empty when hi < lo
  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
};

// Block indices along one axis whose footprint [i*stride, i*stride+len) contains pos.
Range covering(int pos, int len, int stride, int count) {
  Range r;
  const int first = pos - len + 1;
  r.lo = first <= 0 ? 0 : (first + stride - 1) / stride;
  r.hi = std::min(pos / stride, count - 1);
  return r;
}

void check_geometry(const MotionMap& map, int frame_w, int frame_h) {
  const auto& s = map.spec;
  if ((s.cols - 1) * s.stride_x + s.block_w > frame_w || (s.rows - 1) * s.stride_y + s.block_h > frame_h) {
    throw std::invalid_argument("motion map grid does not fit the frame");
  }
}

}  // namespace

OverlapRule parse_overlap_rule(const std::string& name) {
  if (name == "or" || name == "any") return OverlapRule::Any;
  if (name == "majority") return OverlapRule::Majority;
  throw ConfigError("unknown overlap rule '" + name + "' (expected or|majority)");
}

PixelMask rasterize(const MotionMap& map, int frame_w, int frame_h, OverlapRule rule) {
  check_geometry(map, frame_w, frame_h);
  const auto& s = map.spec;
  PixelMask mask(frame_w, frame_h);

  std::vector<Range> col_ranges(static_cast<std::size_t>(frame_w));
  for (int x = 0; x < frame_w; ++x) col_ranges[x] = covering(x, s.block_w, s.stride_x, s.cols);

#pragma omp parallel for schedule(static)
  for (int y = 0; y < frame_h; ++y) {
    const Range rows = covering(y, s.block_h, s.stride_y, s.rows);
    if (rows.size() == 0) continue;
    for (int x = 0; x < frame_w; ++x) {
      const Range cols = col_ranges[static_cast<std::size_t>(x)];
      const int covered = rows.size() * cols.size();
      if (covered == 0) continue;
      int votes = 0;
      for (int r = rows.lo; r <= rows.hi; ++r) {
        for (int c = cols.lo; c <= cols.hi; ++c) votes += map.at(r, c);
      }
      const bool moving = rule == OverlapRule::Any ? votes > 0 : 2 * votes > covered;
      mask.data[static_cast<std::size_t>(y) * frame_w + x] = moving ? 1 : 0;
    }
  }
  return mask;
}

namespace serial {

PixelMask rasterize(const MotionMap& map, int frame_w, int frame_h, OverlapRule rule) {
  check_geometry(map, frame_w, frame_h);
  const auto& s = map.spec;
  std::vector<int> votes(static_cast<std::size_t>(frame_w) * frame_h, 0);
  std::vector<int> cover(votes.size(), 0);
  for (int r = 0; r < s.rows; ++r) {
    for (int c = 0; c < s.cols; ++c) {
      for (int y = r * s.stride_y; y < r * s.stride_y + s.block_h; ++y) {
        for (int x = c * s.stride_x; x < c * s.stride_x + s.block_w; ++x) {
          const std::size_t i = static_cast<std::size_t>(y) * frame_w + x;
          ++cover[i];
          votes[i] += map.at(r, c);
        }
      }
    }
  }
  PixelMask mask(frame_w, frame_h);
  for (std::size_t i = 0; i < votes.size(); ++i) {
    const bool moving = rule == OverlapRule::Any ? votes[i] > 0 : 2 * votes[i] > cover[i];
    mask.data[i] = cover[i] > 0 && moving ? 1 : 0;
  }
  return mask;
}

}  // namespace serial
}  // namespace bgtex
