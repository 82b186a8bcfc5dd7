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

#include "bgtex/sigma_delta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace bgtex {
namespace {

inline int sgn(int v) { return (v > 0) - (v < 0); }

inline std::uint8_t update_pixel(int& m, int& v, int x, int n, int v_min) {
  m += sgn(x - m);
  const int d = std::abs(x - m);
  if (d != 0) v = std::max(v + sgn(n * d - v), v_min);
  return d >= v ? 1 : 0;
}

void check_frame(const SDState& state, const Frame& frame) {
  if (frame.width != state.width || frame.height != state.height) {
    throw std::invalid_argument("frame " + std::to_string(frame.index) +
                                " does not match the sigma-delta state dimensions");
  }
}

}  // namespace

int quantize_intensity(double value) {
  return static_cast<int>(std::clamp(std::lround(value), 0L, 255L));
}

SDState sd_init(const Frame& frame0, SigmaDeltaParams params) {
  if (params.n <= 0) throw ConfigError("sigma-delta amplification must be positive");
  if (params.v_min < 1) throw ConfigError("sigma-delta v_min must be at least 1");
  SDState s;
  s.width = frame0.width;
  s.height = frame0.height;
  s.params = params;
  s.m.resize(frame0.size());
  std::transform(frame0.data.begin(), frame0.data.end(), s.m.begin(), quantize_intensity);
  s.v.assign(frame0.size(), params.v_min);
  return s;
}

PixelMask sd_step(SDState& state, const Frame& frame) {
  check_frame(state, frame);
  PixelMask mask(state.width, state.height);
  const int n = state.params.n;
  const int v_min = state.params.v_min;
  const int rows = state.height;
  const std::size_t w = static_cast<std::size_t>(state.width);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < rows; ++y) {
    for (std::size_t i = static_cast<std::size_t>(y) * w; i < (static_cast<std::size_t>(y) + 1) * w; ++i) {
      mask.data[i] = update_pixel(state.m[i], state.v[i], quantize_intensity(frame.data[i]), n, v_min);
    }
  }
  return mask;
}

namespace serial {

PixelMask sd_step(SDState& state, const Frame& frame) {
  check_frame(state, frame);
  PixelMask mask(state.width, state.height);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask.data[i] = update_pixel(state.m[i], state.v[i], quantize_intensity(frame.data[i]),
                                state.params.n, state.params.v_min);
  }
  return mask;
}

}  // namespace serial
}  // namespace bgtex
