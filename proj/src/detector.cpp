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

#include "bgtex/detector.hpp"

#include <algorithm>
#include <utility>

namespace bgtex {

DetectorKind parse_detector_kind(const std::string& name) {
  if (name == "block-texture") return DetectorKind::BlockTexture;
  if (name == "sigma-delta") return DetectorKind::SigmaDelta;
  throw ConfigError("unknown detector '" + name + "' (expected block-texture|sigma-delta)");
}

std::string to_string(DetectorKind kind) {
  return kind == DetectorKind::BlockTexture ? "block-texture" : "sigma-delta";
}

void DetectorConfig::validate() const {
  if (block_w <= 0 || block_h <= 0) throw ConfigError("block size must be positive");
  if (stride_x <= 0 || stride_y <= 0) throw ConfigError("stride must be positive");
  if (stride_x > block_w || stride_y > block_h) throw ConfigError("stride must not exceed the block size");
  params.validate();
  if (sigma_delta.n <= 0) throw ConfigError("sigma-delta amplification must be positive");
  if (sigma_delta.v_min < 1) throw ConfigError("sigma-delta v_min must be at least 1");
}

DetectorConfig non_overlapping_defaults() {
  DetectorConfig c;
  c.block_w = c.block_h = 12;
  c.stride_x = c.stride_y = 12;
  return c;
}

Detector::Detector(DetectorConfig config) : config_(std::move(config)) { config_.validate(); }

void Detector::resume(StationaryModel model) {
  if (config_.kind != DetectorKind::BlockTexture) throw ConfigError("only the block-texture model can be resumed");
  if (model.spec.block_w != config_.block_w || model.spec.block_h != config_.block_h ||
      model.spec.stride_x != config_.stride_x || model.spec.stride_y != config_.stride_y) {
    throw ConfigError("resumed model was built with a different block configuration");
  }
  model_ = std::move(model);
}

PixelMask Detector::process(const Frame& frame) {
  ++frames_seen_;
  if (config_.kind == DetectorKind::SigmaDelta) {
    if (!sd_state_) {
      sd_state_ = sd_init(frame, config_.sigma_delta);
      return PixelMask(frame.width, frame.height);
    }
    return sd_step(*sd_state_, frame);
  }

  if (!grid_) {
    grid_ = make_grid_spec(frame.width, frame.height, config_.block_w, config_.block_h, config_.stride_x,
                           config_.stride_y);
    if (model_ && !(model_->spec == *grid_)) throw ConfigError("resumed model grid does not match the frames");
  }
  const BlockTextureGrid t = block_textures(frame, *grid_);
  max_abs_component_ = std::max(max_abs_component_, t.max_abs_component);
  if (!model_) {
    model_ = init_model(t);
    last_map_.reset();
    return PixelMask(frame.width, frame.height);
  }
  if (!(model_->spec == t.spec)) throw std::invalid_argument("frame geometry changed mid-sequence");
  last_map_ = step(*model_, t, config_.params);
  max_delta_ = std::max(max_delta_, last_map_->max_delta);
  return rasterize(*last_map_, frame.width, frame.height, config_.overlap);
}

}  // namespace bgtex
