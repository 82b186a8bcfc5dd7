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

// Block-texture representation: per-pixel 5-d texture vectors from the
// normalized directional differences of a 3x3 neighbourhood, decomposed
// with a single-level Haar pair and averaged over blocks.

#include <array>
#include <cstddef>
#include <vector>

#include "bgtex/image.hpp"

namespace bgtex {

inline constexpr int kTextureDims = 5;

using Patch = std::array<double, 9>;  // 3x3, row-major
using Vec8 = std::array<double, 8>;
using Vec4 = std::array<double, 4>;
using Vec5 = std::array<double, kTextureDims>;

struct TextureVector {
  Vec4 g{};          // approximation coefficients
  double e_h = 0.0;  // detail energy

  Vec5 components() const { return {g[0], g[1], g[2], g[3], e_h}; }
};

struct HaarCoefficients {
  Vec4 approx{};
  Vec4 detail{};
};

/// Geometry of the block grid laid over a frame. Blocks whose footprint
/// would cross the right or bottom frame edge are not part of the grid.
struct BlockGridSpec {
  int block_w = 8;
  int block_h = 8;
  int stride_x = 4;
  int stride_y = 4;
  int cols = 0;  // blocks along x
  int rows = 0;  // blocks along y

  std::size_t cells() const { return static_cast<std::size_t>(cols) * rows; }
  bool overlapping() const { return stride_x * 2 == block_w && stride_y * 2 == block_h; }
  bool non_overlapping() const { return stride_x == block_w && stride_y == block_h; }

  friend bool operator==(const BlockGridSpec&, const BlockGridSpec&) = default;
};

/// Builds the grid for a frame. Throws ConfigError for non-positive sizes
/// or a stride larger than the block, std::invalid_argument when the frame
/// cannot hold a single block.
BlockGridSpec make_grid_spec(int frame_w, int frame_h, int block_w, int block_h,
                             int stride_x, int stride_y);

struct BlockTextureGrid {
  BlockGridSpec spec;
  std::vector<Vec5> cells;  // row-major, rows x cols
  // Largest |component| over every interior per-pixel vector of the frame.
  double max_abs_component = 0.0;

  Vec5& at(int row, int col) { return cells[static_cast<std::size_t>(row) * spec.cols + col]; }
  const Vec5& at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * spec.cols + col];
  }
};

/// Neighbour order is NW, N, NE, W, E, SW, S, SE; entry j is centre - neighbour.
Vec8 directional_differences(const Patch& patch);

/// Unit L2 norm, or the zero vector when the input is zero.
Vec8 normalize(const Vec8& v);

/// Orthonormal Haar analysis over adjacent pairs (0,1), (2,3), (4,5), (6,7).
HaarCoefficients haar_decompose(const Vec8& v);

TextureVector texture_vector(const Patch& patch);

/// 3x3 neighbourhood centred on (x, y); requires 1 <= x < w-1, 1 <= y < h-1.
Patch patch_at(const Frame& frame, int x, int y);

/// Mean texture vector of each block, taken over the block's pixels whose
/// whole 3x3 neighbourhood lies inside the frame. OpenMP-parallel; output is
/// bit-identical to serial::block_textures.
BlockTextureGrid block_textures(const Frame& frame, const BlockGridSpec& spec);

namespace serial {
BlockTextureGrid block_textures(const Frame& frame, const BlockGridSpec& spec);
}  // namespace serial

}  // namespace bgtex
