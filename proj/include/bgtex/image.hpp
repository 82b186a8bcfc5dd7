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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgtex {

// Errors are split by the exit code the CLI maps them to.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public IoError {
 public:
  using IoError::IoError;
};

/// Grayscale frame with real-valued intensities in [0, 255], row-major.
struct Frame {
  int width = 0;
  int height = 0;
  std::size_t index = 0;
  std::vector<double> data;

  Frame() = default;
  Frame(int w, int h, double fill = 0.0, std::size_t idx = 0)
      : width(w), height(h), index(idx),
        data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return data.size(); }
};

/// Binary per-pixel labels, 1 = moving. Used both for detector output
/// and for ground truth.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  BinaryMask() = default;
  BinaryMask(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h),
        data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return data.size(); }
  std::size_t popcount() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

using PixelMask = BinaryMask;
using GroundTruthMask = BinaryMask;

/// Throws std::invalid_argument when the frame violates its invariants
/// (size mismatch, non-finite or out-of-range intensities).
void validate(const Frame& frame);

}  // namespace bgtex
