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

#include "bgtex/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

namespace bgtex {

ConfusionCounts confusion(const PixelMask& mask, const GroundTruthMask& truth) {
  if (mask.width != truth.width || mask.height != truth.height || mask.size() != truth.size()) {
    throw std::invalid_argument("mask and ground truth differ in size");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    const bool predicted = mask.data[i] != 0;
    const bool actual = truth.data[i] != 0;
    if (predicted && actual) ++c.tp;
    else if (predicted) ++c.fp;
    else if (actual) ++c.fn;
    else ++c.tn;
  }
  return c;
}

PrecisionRecall precision_recall(const ConfusionCounts& c) {
  PrecisionRecall pr;
  if (c.tp + c.fp > 0) pr.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  else pr.degenerate = true;
  if (c.tp + c.fn > 0) pr.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  else pr.degenerate = true;
  return pr;
}

double accuracy(const ConfusionCounts& c) {
  const std::size_t n = c.total();
  return n == 0 ? 0.0 : static_cast<double>(c.tp + c.tn) / static_cast<double>(n);
}

std::optional<double> pixel_snr(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("SNR needs at least two samples");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  if (*lo == *hi) return std::nullopt;
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double sigma = std::sqrt(ss / n);
  if (sigma == 0.0) return std::nullopt;
  return 20.0 * std::log10((*hi - *lo) / sigma);
}

PsnrReport video_psnr(std::span<const Frame> frames) {
  if (frames.size() < 2) throw std::invalid_argument("PSNR needs at least two background frames");
  PsnrReport report;
  report.width = frames.front().width;
  report.height = frames.front().height;
  for (const Frame& f : frames) {
    if (f.width != report.width || f.height != report.height) {
      throw std::invalid_argument("frame " + std::to_string(f.index) + " differs in size");
    }
  }
  const std::size_t pixels = frames.front().size();
  report.per_pixel_snr.assign(pixels, std::nullopt);
  const int rows = report.height;
  const std::size_t w = static_cast<std::size_t>(report.width);
#pragma omp parallel
  {
    std::vector<double> series(frames.size());
#pragma omp for schedule(static)
    for (int y = 0; y < rows; ++y) {
      for (std::size_t i = static_cast<std::size_t>(y) * w; i < (static_cast<std::size_t>(y) + 1) * w; ++i) {
        for (std::size_t f = 0; f < frames.size(); ++f) series[f] = frames[f].data[i];
        report.per_pixel_snr[i] = pixel_snr(series);
      }
    }
  }
  double sum = 0.0;
  for (const auto& snr : report.per_pixel_snr) {
    if (snr) {
      sum += *snr;
      ++report.included;
    }
  }
  if (report.included == 0) throw std::invalid_argument("every pixel is constant; PSNR is undefined");
  report.psnr = sum / static_cast<double>(report.included);
  return report;
}

std::vector<FrameScore> evaluate_sequence(const EvaluationSequence& seq, const DetectorConfig& config,
                                          std::size_t stride) {
  if (stride == 0) throw ConfigError("frame stride must be positive");
  Detector detector(config);
  std::vector<FrameScore> scores;
  for (std::size_t f = 0; f < seq.frames.size(); f += stride) {
    const bool seeding = detector.frames_seen() == 0;
    const PixelMask mask = detector.process(seq.frames[f]);
    if (seeding) continue;
    const auto it = seq.truth.find(f);
    if (it == seq.truth.end()) continue;
    FrameScore s;
    s.frame = f;
    s.counts = confusion(mask, it->second);
    s.pr = precision_recall(s.counts);
    s.accuracy = accuracy(s.counts);
    scores.push_back(s);
  }
  return scores;
}

std::vector<StrideResult> sampling_sweep(std::span<const EvaluationSequence> sequences,
                                         const DetectorConfig& config, std::span<const std::size_t> strides) {
  for (std::size_t s : strides) {
    if (s == 0) throw ConfigError("frame stride must be positive");
  }
  std::vector<StrideResult> out;
  for (std::size_t stride : strides) {
    StrideResult r;
    r.stride = stride;
    std::vector<double> means;
    for (const auto& seq : sequences) {
      const auto scores = evaluate_sequence(seq, config, stride);
      r.scored_frames += scores.size();
      if (scores.empty()) {
        r.per_sequence.push_back(std::nullopt);
        continue;
      }
      double acc = 0.0;
      for (const auto& s : scores) acc += s.accuracy;
      means.push_back(acc / static_cast<double>(scores.size()));
      r.per_sequence.push_back(means.back());
    }
    if (!means.empty()) {
      r.mean = std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(means.size());
      double ss = 0.0;
      for (double m : means) ss += (m - r.mean) * (m - r.mean);
      r.stddev = std::sqrt(ss / static_cast<double>(means.size()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void write_confusion_csv(std::ostream& out, std::span<const FrameScore> rows) {
  out << "frame,tp,fp,tn,fn,precision,recall,accuracy\n";
  for (const auto& r : rows) {
    out << r.frame << ',' << r.counts.tp << ',' << r.counts.fp << ',' << r.counts.tn << ',' << r.counts.fn << ','
        << fmt(r.pr.precision) << ',' << fmt(r.pr.recall) << ',' << fmt(r.accuracy) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const StrideResult> rows) {
  const std::size_t nseq = rows.empty() ? 0 : rows.front().per_sequence.size();
  out << "stride,mean_accuracy,stddev_accuracy,scored_frames";
  for (std::size_t i = 0; i < nseq; ++i) out << ",seq" << i;
  out << '\n';
  for (const auto& r : rows) {
    out << r.stride << ',' << fmt(r.mean) << ',' << fmt(r.stddev) << ',' << r.scored_frames;
    for (const auto& a : r.per_sequence) out << ',' << (a ? fmt(*a) : std::string());
    out << '\n';
  }
}

void write_psnr_csv(std::ostream& out, const PsnrReport& report) {
  out << "x,y,snr_db\n";
  for (int y = 0; y < report.height; ++y) {
    for (int x = 0; x < report.width; ++x) {
      const auto& snr = report.per_pixel_snr[static_cast<std::size_t>(y) * report.width + x];
      if (snr) out << x << ',' << y << ',' << fmt(*snr) << '\n';
    }
  }
  out << "# psnr_db=" << fmt(report.psnr) << " included=" << report.included
      << " excluded=" << report.per_pixel_snr.size() - report.included << '\n';
}

}  // namespace bgtex
