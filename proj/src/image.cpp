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

#include "bgtex/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bgtex {

std::size_t BinaryMask::popcount() const {
  return static_cast<std::size_t>(std::count_if(data.begin(), data.end(), [](auto v) { return v != 0; }));
}

void validate(const Frame& frame) {
  if (frame.width <= 0 || frame.height <= 0) throw std::invalid_argument("frame has empty dimensions");
  if (frame.data.size() != static_cast<std::size_t>(frame.width) * frame.height) {
    throw std::invalid_argument("frame " + std::to_string(frame.index) + ": data size does not match dimensions");
  }
  for (double v : frame.data) {
    if (!std::isfinite(v) || v < 0.0 || v > 255.0) {
      throw std::invalid_argument("frame " + std::to_string(frame.index) + ": intensity outside [0, 255]");
    }
  }
}

}  // namespace bgtex
