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

// Synthetic sequences with exact ground truth: a static textured scene with
// additive Gaussian noise, an optional moving textured rectangle, a global
// illumination change and an oscillating background patch.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bgtex/image.hpp"

namespace bgtex {

enum class IlluminationChange { None, Ramp, Step };

IlluminationChange parse_illumination(const std::string& name);

struct SynthConfig {
  int width = 160;
  int height = 120;
  std::size_t frames = 100;
  std::uint64_t seed = 1;
  double noise_sigma = 2.0;

  // Background texture: i.i.d. uniform intensities, fixed for the sequence.
  double background_low = 40.0;
  double background_high = 215.0;

  bool rect = true;
  int rect_w = 24;
  int rect_h = 24;
  int rect_x0 = 8;
  int rect_y0 = 48;
  double speed_x = 2.0;  // px / frame
  double speed_y = 0.0;

  IlluminationChange illumination = IlluminationChange::None;
  double illumination_amount = 0.3;  // relative gain change
  std::size_t illumination_frame = 50;  // step onset

  bool oscillate = false;
  int osc_x = 0;
  int osc_y = 0;
  int osc_w = 32;
  int osc_h = 32;
  double osc_amplitude = 20.0;
  double osc_period = 8.0;  // frames

  /// Throws ConfigError on invalid geometry or ranges.
  void validate() const;
};

struct SynthSequence {
  std::vector<Frame> frames;           // real-valued, clamped to [0, 255]
  std::vector<GroundTruthMask> truth;  // 1 exactly on the rectangle
};

SynthSequence generate_sequence(const SynthConfig& config);

}  // namespace bgtex
