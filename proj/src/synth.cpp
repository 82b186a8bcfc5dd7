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

#include "bgtex/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace bgtex {

IlluminationChange parse_illumination(const std::string& name) {
  if (name == "none") return IlluminationChange::None;
  if (name == "ramp") return IlluminationChange::Ramp;
  if (name == "step") return IlluminationChange::Step;
  throw ConfigError("unknown illumination change '" + name + "' (expected none|ramp|step)");
}

void SynthConfig::validate() const {
  if (width <= 0 || height <= 0) throw ConfigError("synthetic frame size must be positive");
  if (frames == 0) throw ConfigError("synthetic sequence needs at least one frame");
  if (noise_sigma < 0.0) throw ConfigError("noise sigma must be non-negative");
  if (background_low < 0.0 || background_high > 255.0 || background_low > background_high) {
    throw ConfigError("background range must lie within [0, 255]");
  }
  if (rect && (rect_w <= 0 || rect_h <= 0)) throw ConfigError("rectangle size must be positive");
  if (oscillate && (osc_w <= 0 || osc_h <= 0 || osc_period <= 0.0)) {
    throw ConfigError("oscillating region needs a positive size and period");
  }
}

SynthSequence generate_sequence(const SynthConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const int w = cfg.width;
  const int h = cfg.height;

  std::uniform_real_distribution<double> bg_dist(cfg.background_low, cfg.background_high);
  std::vector<double> background(static_cast<std::size_t>(w) * h);
  for (double& v : background) v = bg_dist(rng);

  std::uniform_real_distribution<double> rect_dist(20.0, 235.0);
  std::vector<double> rect_tex(cfg.rect ? static_cast<std::size_t>(cfg.rect_w) * cfg.rect_h : 0);
  for (double& v : rect_tex) v = rect_dist(rng);

  std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
  std::vector<double> phase(cfg.oscillate ? static_cast<std::size_t>(cfg.osc_w) * cfg.osc_h : 0);
  for (double& v : phase) v = phase_dist(rng);

  std::normal_distribution<double> noise(0.0, cfg.noise_sigma > 0.0 ? cfg.noise_sigma : 1.0);

  SynthSequence seq;
  seq.frames.reserve(cfg.frames);
  seq.truth.reserve(cfg.frames);
  for (std::size_t f = 0; f < cfg.frames; ++f) {
    double gain = 1.0;
    if (cfg.illumination == IlluminationChange::Ramp && cfg.frames > 1) {
      gain += cfg.illumination_amount * static_cast<double>(f) / static_cast<double>(cfg.frames - 1);
    } else if (cfg.illumination == IlluminationChange::Step && f >= cfg.illumination_frame) {
      gain += cfg.illumination_amount;
    }
    const int rx = cfg.rect_x0 + static_cast<int>(std::lround(cfg.speed_x * static_cast<double>(f)));
    const int ry = cfg.rect_y0 + static_cast<int>(std::lround(cfg.speed_y * static_cast<double>(f)));

    Frame frame(w, h, 0.0, f);
    GroundTruthMask truth(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double base = background[static_cast<std::size_t>(y) * w + x];
        if (cfg.oscillate && x >= cfg.osc_x && x < cfg.osc_x + cfg.osc_w && y >= cfg.osc_y &&
            y < cfg.osc_y + cfg.osc_h) {
          const double ph = phase[static_cast<std::size_t>(y - cfg.osc_y) * cfg.osc_w + (x - cfg.osc_x)];
          base += cfg.osc_amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(f) / cfg.osc_period + ph);
        }
        if (cfg.rect && x >= rx && x < rx + cfg.rect_w && y >= ry && y < ry + cfg.rect_h) {
          base = rect_tex[static_cast<std::size_t>(y - ry) * cfg.rect_w + (x - rx)];
          truth.at(x, y) = 1;
        }
        double v = gain * base;
        if (cfg.noise_sigma > 0.0) v += noise(rng);
        frame.at(x, y) = std::clamp(v, 0.0, 255.0);
      }
    }
    seq.frames.push_back(std::move(frame));
    seq.truth.push_back(std::move(truth));
  }
  return seq;
}

}  // namespace bgtex
