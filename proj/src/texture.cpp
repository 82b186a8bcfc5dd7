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

#include "bgtex/texture.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bgtex {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Neighbour positions in the row-major 3x3 patch, centre (4) skipped.
constexpr int kNeighbours[8] = {0, 1, 2, 3, 5, 6, 7, 8};

inline void accumulate(Vec5& acc, const Vec5& z) {
  for (int d = 0; d < kTextureDims; ++d) acc[d] += z[d];
}

inline double max_abs(const Vec5& z) {
  double m = 0.0;
  for (double c : z) m = std::max(m, std::abs(c));
  return m;
}

// Pixels whose 3x3 neighbourhood fits in the frame.
inline bool interior(int x, int y, int w, int h) { return x >= 1 && y >= 1 && x < w - 1 && y < h - 1; }

inline int interior_count(int lo, int len, int extent) {
  const int a = std::max(lo, 1);
  const int b = std::min(lo + len, extent - 1);
  return std::max(0, b - a);
}

}  // namespace

BlockGridSpec make_grid_spec(int frame_w, int frame_h, int block_w, int block_h, int stride_x, int stride_y) {
  if (block_w <= 0 || block_h <= 0) throw ConfigError("block size must be positive");
  if (stride_x <= 0 || stride_y <= 0) throw ConfigError("stride must be positive");
  if (stride_x > block_w || stride_y > block_h) throw ConfigError("stride must not exceed the block size");
  if (frame_w < block_w || frame_h < block_h) {
    throw std::invalid_argument("frame " + std::to_string(frame_w) + "x" + std::to_string(frame_h) +
                                " is smaller than one " + std::to_string(block_w) + "x" +
                                std::to_string(block_h) + " block");
  }
  BlockGridSpec spec;
  spec.block_w = block_w;
  spec.block_h = block_h;
  spec.stride_x = stride_x;
  spec.stride_y = stride_y;
  spec.cols = (frame_w - block_w) / stride_x + 1;
  spec.rows = (frame_h - block_h) / stride_y + 1;
  return spec;
}

Vec8 directional_differences(const Patch& patch) {
  Vec8 out{};
  const double c = patch[4];
  for (int j = 0; j < 8; ++j) out[j] = c - patch[kNeighbours[j]];
  return out;
}

Vec8 normalize(const Vec8& v) {
  double sq = 0.0;
  for (double x : v) sq += x * x;
  if (sq == 0.0) return Vec8{};
  const double norm = std::sqrt(sq);
  Vec8 out{};
  for (int j = 0; j < 8; ++j) out[j] = v[j] / norm;
  return out;
}

HaarCoefficients haar_decompose(const Vec8& v) {
  HaarCoefficients out;
  for (int j = 0; j < 4; ++j) {
    out.approx[j] = (v[2 * j] + v[2 * j + 1]) * kInvSqrt2;
    out.detail[j] = (v[2 * j] - v[2 * j + 1]) * kInvSqrt2;
  }
  return out;
}

TextureVector texture_vector(const Patch& patch) {
  const HaarCoefficients hc = haar_decompose(normalize(directional_differences(patch)));
  TextureVector z;
  z.g = hc.approx;
  for (double h : hc.detail) z.e_h += h * h;
  return z;
}

Patch patch_at(const Frame& frame, int x, int y) {
  Patch p{};
  int k = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    const double* row = frame.data.data() + static_cast<std::size_t>(y + dy) * frame.width;
    for (int dx = -1; dx <= 1; ++dx) p[k++] = row[x + dx];
  }
  return p;
}

BlockTextureGrid block_textures(const Frame& frame, const BlockGridSpec& spec) {
  const int w = frame.width;
  const int h = frame.height;
  if (w < spec.block_w || h < spec.block_h) throw std::invalid_argument("frame is smaller than one block");

  // Per-pixel texture vectors for the interior, computed once and shared by
  // every block that covers the pixel.
  std::vector<Vec5> field(static_cast<std::size_t>(w) * h, Vec5{});
  double max_component = 0.0;
#pragma omp parallel for schedule(static) reduction(max : max_component)
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      const Vec5 z = texture_vector(patch_at(frame, x, y)).components();
      field[static_cast<std::size_t>(y) * w + x] = z;
      max_component = std::max(max_component, max_abs(z));
    }
  }

  BlockTextureGrid grid;
  grid.spec = spec;
  grid.cells.assign(spec.cells(), Vec5{});
  grid.max_abs_component = max_component;
  const int total = static_cast<int>(spec.cells());
#pragma omp parallel for schedule(static)
  for (int cell = 0; cell < total; ++cell) {
    const int row = cell / spec.cols;
    const int col = cell % spec.cols;
    const int x0 = col * spec.stride_x;
    const int y0 = row * spec.stride_y;
    const int n = interior_count(x0, spec.block_w, w) * interior_count(y0, spec.block_h, h);
    Vec5 acc{};
    if (n > 0) {
      for (int y = y0; y < y0 + spec.block_h; ++y) {
        for (int x = x0; x < x0 + spec.block_w; ++x) {
          if (interior(x, y, w, h)) accumulate(acc, field[static_cast<std::size_t>(y) * w + x]);
        }
      }
      for (double& a : acc) a /= n;
    }
    grid.cells[static_cast<std::size_t>(cell)] = acc;
  }
  return grid;
}

namespace serial {

BlockTextureGrid block_textures(const Frame& frame, const BlockGridSpec& spec) {
  const int w = frame.width;
  const int h = frame.height;
  if (w < spec.block_w || h < spec.block_h) throw std::invalid_argument("frame is smaller than one block");

  BlockTextureGrid grid;
  grid.spec = spec;
  grid.cells.assign(spec.cells(), Vec5{});
  for (int row = 0; row < spec.rows; ++row) {
    for (int col = 0; col < spec.cols; ++col) {
      const int x0 = col * spec.stride_x;
      const int y0 = row * spec.stride_y;
      Vec5 acc{};
      int n = 0;
      for (int y = y0; y < y0 + spec.block_h; ++y) {
        for (int x = x0; x < x0 + spec.block_w; ++x) {
          if (!interior(x, y, w, h)) continue;
          accumulate(acc, texture_vector(patch_at(frame, x, y)).components());
          ++n;
        }
      }
      if (n > 0) {
        for (double& a : acc) a /= n;
      }
      grid.at(row, col) = acc;
    }
  }
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      grid.max_abs_component =
          std::max(grid.max_abs_component, max_abs(texture_vector(patch_at(frame, x, y)).components()));
    }
  }
  return grid;
}

}  // namespace serial
}  // namespace bgtex
