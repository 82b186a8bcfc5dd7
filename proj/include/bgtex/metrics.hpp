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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bgtex/detector.hpp"
#include "bgtex/image.hpp"

namespace bgtex {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp; fp += o.fp; tn += o.tn; fn += o.fn;
    return *this;
  }
};

struct PrecisionRecall {
  double precision = 1.0;
  double recall = 1.0;
  bool degenerate = false;  // one of the ratios had a zero denominator
};

/// Moving is the positive class. Throws std::invalid_argument on a size mismatch.
ConfusionCounts confusion(const PixelMask& mask, const GroundTruthMask& truth);

/// A ratio whose denominator is zero is reported as 1.
PrecisionRecall precision_recall(const ConfusionCounts& c);

/// (tp + tn) / total; 0 for an empty count.
double accuracy(const ConfusionCounts& c);

/// 20 log10((max - min) / sigma) with the population standard deviation.
/// Empty when sigma == 0. Throws std::invalid_argument for fewer than 2 samples.
std::optional<double> pixel_snr(std::span<const double> samples);

struct PsnrReport {
  int width = 0;
  int height = 0;
  std::vector<std::optional<double>> per_pixel_snr;  // empty = excluded
  std::size_t included = 0;
  double psnr = 0.0;
};

/// Mean per-pixel SNR over frames the caller designates as background-only.
/// Throws std::invalid_argument when every pixel is excluded or the frames
/// disagree in size.
PsnrReport video_psnr(std::span<const Frame> frames);

struct EvaluationSequence {
  std::vector<Frame> frames;
  std::map<std::size_t, GroundTruthMask> truth;  // keyed by position in `frames`
};

struct FrameScore {
  std::size_t frame = 0;
  ConfusionCounts counts;
  PrecisionRecall pr;
  double accuracy = 0.0;
};

/// Runs a fresh detector over frames 0, stride, 2*stride, ... and scores
/// every processed frame that has ground truth, except the seeding frame.
std::vector<FrameScore> evaluate_sequence(const EvaluationSequence& seq, const DetectorConfig& config,
                                          std::size_t stride = 1);

struct StrideResult {
  std::size_t stride = 0;
  std::vector<std::optional<double>> per_sequence;  // mean accuracy; empty if nothing was scored
  double mean = 0.0;
  double stddev = 0.0;  // population, across sequences
  std::size_t scored_frames = 0;
};

/// Accuracy for each frame stride. Throws ConfigError on a zero stride.
std::vector<StrideResult> sampling_sweep(std::span<const EvaluationSequence> sequences,
                                         const DetectorConfig& config,
                                         std::span<const std::size_t> strides);

// CSV reports. Column sets are fixed:
//   frame,tp,fp,tn,fn,precision,recall,accuracy
//   stride,mean_accuracy,stddev_accuracy,scored_frames,seq0,seq1,...
//   x,y,snr_db (excluded pixels are omitted), followed by a summary line
void write_confusion_csv(std::ostream& out, std::span<const FrameScore> rows);
void write_sweep_csv(std::ostream& out, std::span<const StrideResult> rows);
void write_psnr_csv(std::ostream& out, const PsnrReport& report);

}  // namespace bgtex
