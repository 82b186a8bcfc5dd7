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

// Subcommand implementations behind the bgtex executable. Each run_* call
// validates its configuration before touching any input file and throws
// ConfigError / IoError (exit codes 2 / 3) on failure.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bgtex/density.hpp"
#include "bgtex/detector.hpp"
#include "bgtex/synth.hpp"

namespace bgtex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  std::string detector = "block-texture";
  std::string block_size = "8x8";
  int stride = 0;  // 0 = half the block size
  double alpha = 0.05;
  double lambda = 0.98;
  std::string overlap = "or";
  int sd_n = 4;
  int sd_vmin = 2;

  std::string frames;  // printf pattern or .y4m
  std::string gt;      // printf pattern
  std::string masks;   // printf pattern of precomputed masks
  std::size_t start = 0;
  std::size_t count = 0;  // 0 = every available frame
  std::size_t frame_stride = 1;
  std::string strides;  // comma list for the sampling sweep
  std::string out = "bgtex_out";
  std::string resume;
  std::size_t snapshot_every = 0;

  std::string roi;  // mask file or x,y,w,h
  std::string axis = "y";
  std::size_t min_area = 0;  // 0 = one block footprint
  bool annotate = false;

  std::optional<std::uint64_t> seed;
  int width = 160;
  int height = 120;
  double noise = 2.0;
  std::string rect_size = "24x24";
  std::string rect_pos = "8,48";
  double rect_speed = 2.0;
  bool no_rect = false;
  std::string illumination = "none";
  double illumination_amount = 0.3;
  std::size_t illumination_frame = 50;
  std::string oscillate;  // x,y,w,h or empty
};

std::pair<int, int> parse_size(const std::string& text);
std::vector<std::size_t> parse_list(const std::string& text);
std::vector<int> parse_ints(const std::string& text, std::size_t expected);

DetectorConfig detector_config(const RunConfig& cfg);
SynthConfig synth_config(const RunConfig& cfg);
Roi load_roi(const RunConfig& cfg, int frame_w, int frame_h);

void run_detect(const RunConfig& cfg, const std::string& config_echo, std::ostream& log);
void run_evaluate(const RunConfig& cfg, std::ostream& log);
void run_psnr(const RunConfig& cfg, std::ostream& log);
void run_density(const RunConfig& cfg, std::ostream& log);
void run_synth(const RunConfig& cfg, std::ostream& log);

/// Full command line entry point; returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace bgtex::cli
