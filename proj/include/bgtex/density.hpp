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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "bgtex/image.hpp"

namespace bgtex {

struct Labeling {
  int width = 0;
  int height = 0;
  std::vector<int> labels;  // 0 = background, components numbered densely from 1
  int count = 0;
  std::vector<std::size_t> areas;  // areas[k] is the size of component k+1

  int at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

/// Two-pass 8-connected labelling with union-find equivalences.
Labeling label_components(const BinaryMask& mask);

enum class LaneAxis { X, Y };

LaneAxis parse_lane_axis(const std::string& name);

/// A lane region. Its axis bins are the distinct positions along the lane
/// axis at which the region has at least one pixel.
class Roi {
 public:
  /// Throws std::invalid_argument when the region is empty.
  Roi(BinaryMask region, LaneAxis axis);
  static Roi rectangle(int frame_w, int frame_h, int x, int y, int w, int h, LaneAxis axis);

  const BinaryMask& region() const { return region_; }
  LaneAxis axis() const { return axis_; }
  std::size_t bins() const { return bin_count_; }
  /// Bin index of an axis position, or -1 when the region does not reach it.
  int bin_of(int axis_pos) const { return bin_index_[static_cast<std::size_t>(axis_pos)]; }

 private:
  BinaryMask region_;
  LaneAxis axis_;
  std::vector<int> bin_index_;
  std::size_t bin_count_ = 0;
};

/// Fraction of the ROI's axis bins hit by foreground pixels projected along
/// the lane. Components smaller than `min_area` pixels are dropped first.
double lane_coverage(const Labeling& regions, const Roi& roi, std::size_t min_area = 1);

enum class DensityLevel { Empty, Low, High, Full };

struct DensityState {
  DensityLevel level = DensityLevel::Empty;
  double coverage = 0.0;
};

/// Empty < 0.05 <= Low < 0.30 <= High < 0.90 <= Full.
DensityState classify(double coverage);
std::string to_string(DensityLevel level);

struct DensityRow {
  std::size_t frame = 0;
  DensityState state;
};

/// frame_index,coverage,state
void write_density_csv(std::ostream& out, const std::vector<DensityRow>& rows);

/// Mask rendered at 255 with the ROI outline at 128 and a vertical bar on the
/// right edge whose height is the coverage.
Frame annotate_density(const BinaryMask& mask, const Roi& roi, double coverage);

}  // namespace bgtex
