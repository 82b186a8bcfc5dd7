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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bgtex/texture.hpp"

namespace bgtex {

inline constexpr double kMaxMotionLikelihood = 3.5355339059327378;  // 5 / sqrt(2)

/// Limit of tolerance for a tradeoff lambda in [0, 1]. Throws ConfigError
/// outside that range.
double tolerance(double lambda);

struct DetectorParams {
  double alpha = 0.05;   // learning rate
  double lambda = 0.98;  // tradeoff

  double tau() const { return tolerance(lambda); }
  /// Throws ConfigError unless both values lie in [0, 1].
  void validate() const;
};

template <std::size_t D>
std::array<double, D> sgn_vec(const std::array<double, D>& a) {
  std::array<double, D> out{};
  for (std::size_t i = 0; i < D; ++i) out[i] = a[i] > 0.0 ? 1.0 : (a[i] < 0.0 ? -1.0 : 0.0);
  return out;
}

struct StationaryModel {
  BlockGridSpec spec;
  std::vector<Vec5> m;  // row-major, rows x cols
  std::size_t frame_count = 0;

  const Vec5& at(int row, int col) const { return m[static_cast<std::size_t>(row) * spec.cols + col]; }
};

struct MotionMap {
  BlockGridSpec spec;
  std::vector<std::uint8_t> phi;  // 1 = moving
  std::vector<double> delta;      // motion likelihood per block
  double max_delta = 0.0;

  std::uint8_t at(int row, int col) const { return phi[static_cast<std::size_t>(row) * spec.cols + col]; }
  std::size_t moving_blocks() const;
};

StationaryModel init_model(const BlockTextureGrid& t0);

/// Motion likelihood of one cell against the pre-update model value, followed
/// by the sign-step update of that value. Returns the likelihood.
inline double update_cell(Vec5& model, const Vec5& texture, double alpha) {
  double delta = 0.0;
  for (int d = 0; d < kTextureDims; ++d) {
    const double diff = texture[d] - model[d];
    delta += diff < 0.0 ? -diff : diff;
    if (diff > 0.0) {
      model[d] += alpha;
    } else if (diff < 0.0) {
      model[d] -= alpha;
    }
  }
  return delta;
}

/// Applies one frame of block-textures: every cell's likelihood is taken
/// against M_{f-1}, the model is moved by alpha * Sgn(T - M_{f-1}), and a block
/// is moving when its likelihood is >= tau. Throws std::invalid_argument on a
/// grid mismatch.
MotionMap step(StationaryModel& model, const BlockTextureGrid& t, const DetectorParams& params);

namespace serial {
MotionMap step(StationaryModel& model, const BlockTextureGrid& t, const DetectorParams& params);
}  // namespace serial

// Snapshots. The CSV form is one line per cell ("row,col,m0..m4") after a
// "#"-prefixed header carrying the grid spec; the binary form is a fixed
// little-endian layout tagged "BGTXMDL1".
void save_model_csv(const StationaryModel& model, std::ostream& out);
StationaryModel load_model_csv(std::istream& in);
void save_model_binary(const StationaryModel& model, std::ostream& out);
StationaryModel load_model_binary(std::istream& in);

void save_model(const StationaryModel& model, const std::string& path);
/// Picks the format from the extension (".csv" or anything else = binary).
StationaryModel load_model(const std::string& path);

}  // namespace bgtex
