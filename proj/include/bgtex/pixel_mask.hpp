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

#include <string>

#include "bgtex/background_model.hpp"
#include "bgtex/image.hpp"

namespace bgtex {

enum class OverlapRule {
  Any,       // moving if any covering block is moving
  Majority,  // moving if more than half of the covering blocks are moving
};

OverlapRule parse_overlap_rule(const std::string& name);

/// Block decisions painted onto the pixel grid. Pixels outside every block
/// footprint stay 0.
PixelMask rasterize(const MotionMap& map, int frame_w, int frame_h,
                    OverlapRule rule = OverlapRule::Any);

namespace serial {
PixelMask rasterize(const MotionMap& map, int frame_w, int frame_h,
                    OverlapRule rule = OverlapRule::Any);
}  // namespace serial

}  // namespace bgtex
