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
#include <string>
#include <vector>

#include "bgtex/image.hpp"

namespace bgtex {

/// ITU-R BT.601 luma. Kept real-valued; no rounding.
constexpr double luma_bt601(double r, double g, double b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

// Single images. P5 (gray) and P6 (color, converted with luma_bt601) are
// accepted; maxval other than 255 is rescaled to [0, 255].
Frame read_pnm(const std::string& path);
void write_pgm(const Frame& frame, const std::string& path);

/// Expands a printf-style pattern such as "f%04d.pgm".
std::string format_frame_path(const std::string& pattern, std::size_t index);

/// Loads `count` frames starting at `start`. A pattern ending in ".y4m"
/// is read as a single YUV4MPEG2 stream (Y plane only); anything else is
/// treated as a per-frame printf pattern. Frames come back in ascending
/// index order and must all share dimensions.
std::vector<Frame> load_sequence(const std::string& pattern, std::size_t start,
                                 std::size_t count);

/// Number of consecutive frames available from `start` onward.
std::size_t count_available(const std::string& pattern, std::size_t start);

std::vector<Frame> read_y4m(const std::string& path);

/// Intensity >= 128 maps to moving.
GroundTruthMask load_mask(const std::string& path);
GroundTruthMask threshold_mask(const Frame& image);

/// Moving pixels are written as 255, stationary as 0.
void write_mask(const BinaryMask& mask, const std::string& path);

}  // namespace bgtex
