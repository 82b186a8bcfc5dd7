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

#include <optional>
#include <string>

#include "bgtex/background_model.hpp"
#include "bgtex/image.hpp"
#include "bgtex/pixel_mask.hpp"
#include "bgtex/sigma_delta.hpp"
#include "bgtex/texture.hpp"

namespace bgtex {

enum class DetectorKind { BlockTexture, SigmaDelta };

DetectorKind parse_detector_kind(const std::string& name);
std::string to_string(DetectorKind kind);

struct DetectorConfig {
  DetectorKind kind = DetectorKind::BlockTexture;
  int block_w = 8;
  int block_h = 8;
  int stride_x = 4;
  int stride_y = 4;
  DetectorParams params;
  OverlapRule overlap = OverlapRule::Any;
  SigmaDeltaParams sigma_delta;

  /// Throws ConfigError on any invalid field.
  void validate() const;
};

/// Defaults for 12x12 non-overlapping blocks.
DetectorConfig non_overlapping_defaults();

/// Streams frames through either detector. The first frame seeds the model
/// and yields an all-stationary mask.
class Detector {
 public:
  explicit Detector(DetectorConfig config);

  PixelMask process(const Frame& frame);

  /// Resumes from a saved block-texture model instead of seeding from the
  /// first frame.
  void resume(StationaryModel model);

  const DetectorConfig& config() const { return config_; }
  std::size_t frames_seen() const { return frames_seen_; }
  const std::optional<StationaryModel>& model() const { return model_; }
  const std::optional<MotionMap>& last_motion_map() const { return last_map_; }
  // Largest per-pixel texture component seen so far (block-texture only).
  double max_abs_component() const { return max_abs_component_; }
  double max_delta() const { return max_delta_; }

 private:
  DetectorConfig config_;
  std::size_t frames_seen_ = 0;
  std::optional<BlockGridSpec> grid_;
  std::optional<StationaryModel> model_;
  std::optional<MotionMap> last_map_;
  std::optional<SDState> sd_state_;
  double max_abs_component_ = 0.0;
  double max_delta_ = 0.0;
};

}  // namespace bgtex
