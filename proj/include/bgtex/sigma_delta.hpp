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

// Per-pixel sigma-delta background estimator, used as the comparison
// baseline. Integer arithmetic throughout.

#include <vector>

#include "bgtex/image.hpp"

namespace bgtex {

struct SigmaDeltaParams {
  int n = 4;      // amplification of the non-zero differences
  int v_min = 2;  // variance floor
};

struct SDState {
  int width = 0;
  int height = 0;
  SigmaDeltaParams params;
  std::vector<int> m;  // background estimate
  std::vector<int> v;  // variance estimate, >= v_min
};

/// Rounds to the nearest integer level in [0, 255].
int quantize_intensity(double value);

SDState sd_init(const Frame& frame0, SigmaDeltaParams params = {});

/// Per pixel: m += sgn(x - m); d = |x - m|; if d != 0, v += sgn(n*d - v) and
/// v is floored at v_min; moving iff d >= v.
PixelMask sd_step(SDState& state, const Frame& frame);

namespace serial {
PixelMask sd_step(SDState& state, const Frame& frame);
}  // namespace serial

}  // namespace bgtex
