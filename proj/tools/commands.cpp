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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "bgtex/background_model.hpp"
#include "bgtex/frame_io.hpp"
#include "bgtex/metrics.hpp"
#include "bgtex/pixel_mask.hpp"

namespace bgtex::cli {
namespace fs = std::filesystem;
namespace {

// Frames addressed by absolute index, read lazily for printf patterns.
class FrameSource {
 public:
  FrameSource(const std::string& pattern, std::size_t start, std::size_t count)
      : pattern_(pattern), start_(start), count_(count) {
    if (pattern_.empty()) throw ConfigError("--frames is required");
    if (pattern_.ends_with(".y4m")) {
      y4m_ = read_y4m(pattern_);
      const std::size_t avail = y4m_.size() > start_ ? y4m_.size() - start_ : 0;
      if (count_ == 0) count_ = avail;
      if (count_ > avail) throw IoError(pattern_ + ": frame " + std::to_string(y4m_.size()) + " missing");
    } else if (count_ == 0) {
      count_ = count_available(pattern_, start_);
    }
    if (count_ == 0) throw IoError("no frames found for '" + pattern_ + "' from index " + std::to_string(start_));
  }

  std::size_t first() const { return start_; }
  std::size_t end() const { return start_ + count_; }

  Frame get(std::size_t index) {
    Frame f;
    if (!y4m_.empty()) {
      f = y4m_[index];
      f.index = index;
    } else {
      f = load_sequence(pattern_, index, 1).front();
    }
    if (width_ == 0) {
      width_ = f.width;
      height_ = f.height;
    } else if (f.width != width_ || f.height != height_) {
      throw IoError("frame " + std::to_string(index) + ": dimensions differ from the first frame");
    }
    return f;
  }

 private:
  std::string pattern_;
  std::size_t start_;
  std::size_t count_;
  std::vector<Frame> y4m_;
  int width_ = 0;
  int height_ = 0;
};

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

std::string numbered(const char* stem, std::size_t index, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%06zu%s", stem, index, ext);
  return buf;
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::optional<GroundTruthMask> maybe_mask(const std::string& pattern, std::size_t index) {
  if (pattern.empty()) return std::nullopt;
  const std::string path = format_frame_path(pattern, index);
  if (!fs::exists(path)) return std::nullopt;
  return load_mask(path);
}

struct ScoreSummary {
  double precision = 0.0;
  double recall = 0.0;
  double accuracy = 0.0;
  std::size_t degenerate = 0;
};

ScoreSummary summarize(const std::vector<FrameScore>& scores) {
  ScoreSummary s;
  for (const auto& r : scores) {
    s.precision += r.pr.precision;
    s.recall += r.pr.recall;
    s.accuracy += r.accuracy;
    s.degenerate += r.pr.degenerate ? 1 : 0;
  }
  const double n = static_cast<double>(scores.size());
  s.precision /= n;
  s.recall /= n;
  s.accuracy /= n;
  return s;
}

}  // namespace

std::pair<int, int> parse_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) {
      const int v = std::stoi(text);
      if (v > 0) return {v, v};
    } else {
      const int w = std::stoi(text.substr(0, x));
      const int h = std::stoi(text.substr(x + 1));
      if (w > 0 && h > 0) return {w, h};
    }
  } catch (const std::logic_error&) {
  }
  throw ConfigError("bad size '" + text + "' (expected WxH)");
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw ConfigError("bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty list '" + text + "'");
  return out;
}

std::vector<int> parse_ints(const std::string& text, std::size_t expected) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ConfigError("bad integer '" + item + "' in '" + text + "'");
    }
  }
  if (out.size() != expected) {
    throw ConfigError("expected " + std::to_string(expected) + " comma-separated integers in '" + text + "'");
  }
  return out;
}

DetectorConfig detector_config(const RunConfig& cfg) {
  DetectorConfig d;
  d.kind = parse_detector_kind(cfg.detector);
  std::tie(d.block_w, d.block_h) = parse_size(cfg.block_size);
  if (cfg.stride < 0) throw ConfigError("stride must be positive");
  d.stride_x = cfg.stride > 0 ? cfg.stride : std::max(1, d.block_w / 2);
  d.stride_y = cfg.stride > 0 ? cfg.stride : std::max(1, d.block_h / 2);
  d.params.alpha = cfg.alpha;
  d.params.lambda = cfg.lambda;
  d.overlap = parse_overlap_rule(cfg.overlap);
  d.sigma_delta.n = cfg.sd_n;
  d.sigma_delta.v_min = cfg.sd_vmin;
  if (cfg.frame_stride == 0) throw ConfigError("frame stride must be positive");
  d.validate();
  return d;
}

SynthConfig synth_config(const RunConfig& cfg) {
  if (!cfg.seed) throw ConfigError("synth requires --seed");
  SynthConfig s;
  s.seed = *cfg.seed;
  s.width = cfg.width;
  s.height = cfg.height;
  s.frames = cfg.count == 0 ? 100 : cfg.count;
  s.noise_sigma = cfg.noise;
  s.rect = !cfg.no_rect;
  std::tie(s.rect_w, s.rect_h) = parse_size(cfg.rect_size);
  const auto pos = parse_ints(cfg.rect_pos, 2);
  s.rect_x0 = pos[0];
  s.rect_y0 = pos[1];
  s.speed_x = cfg.rect_speed;
  s.illumination = parse_illumination(cfg.illumination);
  s.illumination_amount = cfg.illumination_amount;
  s.illumination_frame = cfg.illumination_frame;
  if (!cfg.oscillate.empty()) {
    const auto r = parse_ints(cfg.oscillate, 4);
    s.oscillate = true;
    s.osc_x = r[0];
    s.osc_y = r[1];
    s.osc_w = r[2];
    s.osc_h = r[3];
  }
  s.validate();
  return s;
}

Roi load_roi(const RunConfig& cfg, int frame_w, int frame_h) {
  const LaneAxis axis = parse_lane_axis(cfg.axis);
  if (cfg.roi.empty()) throw ConfigError("--roi is required");
  if (cfg.roi.find(',') != std::string::npos) {
    const auto r = parse_ints(cfg.roi, 4);
    if (r[2] <= 0 || r[3] <= 0) throw ConfigError("ROI width and height must be positive");
    try {
      return Roi::rectangle(frame_w, frame_h, r[0], r[1], r[2], r[3], axis);
    } catch (const std::invalid_argument&) {
      throw ConfigError("ROI '" + cfg.roi + "' does not overlap the frame");
    }
  }
  GroundTruthMask region = load_mask(cfg.roi);
  if (region.width != frame_w || region.height != frame_h) throw ConfigError("ROI mask size differs from the frames");
  try {
    return Roi(std::move(region), axis);
  } catch (const std::invalid_argument&) {
    throw ConfigError("ROI mask '" + cfg.roi + "' is empty");
  }
}

void run_detect(const RunConfig& cfg, const std::string& config_echo, std::ostream& log) {
  const DetectorConfig dc = detector_config(cfg);
  Detector detector(dc);
  if (!cfg.resume.empty()) detector.resume(load_model(cfg.resume));

  FrameSource source(cfg.frames, cfg.start, cfg.count);
  const fs::path out = cfg.out;
  ensure_dir(out / "masks");
  ensure_dir(out / "reports");
  const bool texture = dc.kind == DetectorKind::BlockTexture;
  if (texture) ensure_dir(out / "model");
  {
    auto echo = open_out(out / "config.ini");
    echo << config_echo;
  }

  auto summary = open_out(out / "reports" / "detect_summary.csv");
  summary << "frame,moving_blocks,moving_pixels,max_delta\n";

  using clock = std::chrono::steady_clock;
  clock::duration compute{};
  const auto wall_start = clock::now();
  std::size_t processed = 0;
  for (std::size_t i = source.first(); i < source.end(); i += cfg.frame_stride) {
    const Frame frame = source.get(i);
    const auto t0 = clock::now();
    const PixelMask mask = detector.process(frame);
    compute += clock::now() - t0;
    ++processed;

    write_mask(mask, (out / "masks" / numbered("m", i, ".pgm")).string());
    const auto& map = detector.last_motion_map();
    const bool stepped = texture && map && processed > 1;
    summary << i << ',' << (stepped ? map->moving_blocks() : 0) << ',' << mask.popcount() << ','
            << fixed6(stepped ? map->max_delta : 0.0) << '\n';
    if (texture && cfg.snapshot_every > 0 && processed % cfg.snapshot_every == 0) {
      save_model(*detector.model(), (out / "model" / numbered("model_", i, ".csv")).string());
    }
  }
  if (texture && detector.model()) {
    save_model(*detector.model(), (out / "model" / "model_final.csv").string());
    save_model(*detector.model(), (out / "model" / "model_final.bin").string());
  }

  const double wall = std::chrono::duration<double>(clock::now() - wall_start).count();
  const double busy = std::chrono::duration<double>(compute).count();
  log << "processed " << processed << " frames with " << to_string(dc.kind) << "; "
      << fixed6(processed / std::max(wall, 1e-9)) << " fps end-to-end, "
      << fixed6(processed / std::max(busy, 1e-9)) << " fps detection only\n";
  if (texture) {
    log << "max |texture component| = " << fixed6(detector.max_abs_component())
        << ", max motion likelihood = " << fixed6(detector.max_delta()) << '\n';
  }
}

void run_evaluate(const RunConfig& cfg, std::ostream& log) {
  if (cfg.gt.empty()) throw ConfigError("--gt is required");
  std::vector<std::size_t> strides;
  if (!cfg.strides.empty()) {
    strides = parse_list(cfg.strides);
    for (std::size_t s : strides) {
      if (s == 0) throw ConfigError("frame stride must be positive");
    }
  }
  const fs::path out = cfg.out;
  std::vector<FrameScore> scores;

  if (!cfg.masks.empty()) {
    const std::size_t n = cfg.count == 0 ? count_available(cfg.masks, cfg.start) : cfg.count;
    for (std::size_t i = cfg.start; i < cfg.start + n; ++i) {
      const auto truth = maybe_mask(cfg.gt, i);
      if (!truth) continue;
      FrameScore s;
      s.frame = i;
      s.counts = confusion(load_mask(format_frame_path(cfg.masks, i)), *truth);
      s.pr = precision_recall(s.counts);
      s.accuracy = accuracy(s.counts);
      scores.push_back(s);
    }
  } else {
    const DetectorConfig dc = detector_config(cfg);
    FrameSource source(cfg.frames, cfg.start, cfg.count);
    EvaluationSequence seq;
    for (std::size_t i = source.first(); i < source.end(); ++i) {
      seq.frames.push_back(source.get(i));
      if (auto truth = maybe_mask(cfg.gt, i)) seq.truth.emplace(i - source.first(), std::move(*truth));
    }
    if (seq.truth.empty()) throw IoError("missing ground truth: no file matches '" + cfg.gt + "'");
    scores = evaluate_sequence(seq, dc, cfg.frame_stride);
    for (auto& s : scores) s.frame += source.first();
    if (!strides.empty()) {
      ensure_dir(out / "reports");
      const auto sweep = sampling_sweep(std::span(&seq, 1), dc, strides);
      auto f = open_out(out / "reports" / "sweep.csv");
      write_sweep_csv(f, sweep);
      for (const auto& r : sweep) log << "stride " << r.stride << ": accuracy " << fixed6(r.mean) << '\n';
    }
  }
  if (scores.empty()) throw IoError("missing ground truth: no scored frame has a file matching '" + cfg.gt + "'");

  ensure_dir(out / "reports");
  {
    auto f = open_out(out / "reports" / "confusion.csv");
    write_confusion_csv(f, scores);
  }
  const ScoreSummary s = summarize(scores);
  auto f = open_out(out / "reports" / "summary.csv");
  f << "frames,mean_precision,mean_recall,mean_accuracy,degenerate_frames\n"
    << scores.size() << ',' << fixed6(s.precision) << ',' << fixed6(s.recall) << ',' << fixed6(s.accuracy) << ','
    << s.degenerate << '\n';
  log << "scored " << scores.size() << " frames: precision " << fixed6(s.precision) << ", recall "
      << fixed6(s.recall) << ", accuracy " << fixed6(s.accuracy);
  if (s.degenerate > 0) log << " (" << s.degenerate << " frames with an undefined ratio counted as 1)";
  log << '\n';
}

void run_psnr(const RunConfig& cfg, std::ostream& log) {
  FrameSource source(cfg.frames, cfg.start, cfg.count);
  std::vector<Frame> frames;
  for (std::size_t i = source.first(); i < source.end(); ++i) frames.push_back(source.get(i));
  const PsnrReport report = video_psnr(frames);
  const fs::path out = cfg.out;
  ensure_dir(out / "reports");
  auto f = open_out(out / "reports" / "psnr.csv");
  write_psnr_csv(f, report);
  log << "psnr_db=" << fixed6(report.psnr) << " over " << frames.size() << " frames (" << report.included
      << " pixels included)\n";
}

void run_density(const RunConfig& cfg, std::ostream& log) {
  const DetectorConfig dc = detector_config(cfg);
  const std::size_t min_area =
      cfg.min_area > 0 ? cfg.min_area : static_cast<std::size_t>(dc.block_w) * dc.block_h;
  const fs::path out = cfg.out;

  std::vector<DensityRow> rows;
  std::optional<Roi> roi;
  auto handle = [&](std::size_t index, const BinaryMask& mask) {
    if (!roi) roi = load_roi(cfg, mask.width, mask.height);
    if (mask.width != roi->region().width || mask.height != roi->region().height) {
      throw IoError("mask " + std::to_string(index) + " differs in size from the ROI");
    }
    const double coverage = lane_coverage(label_components(mask), *roi, min_area);
    rows.push_back({index, classify(coverage)});
    if (cfg.annotate) write_pgm(annotate_density(mask, *roi, coverage), (out / "annotated" / numbered("a", index, ".pgm")).string());
  };

  parse_lane_axis(cfg.axis);
  if (cfg.roi.empty()) throw ConfigError("--roi is required");
  ensure_dir(out / "reports");
  if (cfg.annotate) ensure_dir(out / "annotated");
  if (!cfg.masks.empty()) {
    const std::size_t n = cfg.count == 0 ? count_available(cfg.masks, cfg.start) : cfg.count;
    if (n == 0) throw IoError("no masks found for '" + cfg.masks + "'");
    for (std::size_t i = cfg.start; i < cfg.start + n; ++i) handle(i, load_mask(format_frame_path(cfg.masks, i)));
  } else {
    Detector detector(dc);
    FrameSource source(cfg.frames, cfg.start, cfg.count);
    for (std::size_t i = source.first(); i < source.end(); i += cfg.frame_stride) handle(i, detector.process(source.get(i)));
  }

  {
    auto f = open_out(out / "reports" / "density.csv");
    write_density_csv(f, rows);
  }
  auto meta = open_out(out / "reports" / "density_meta.txt");
  meta << "projection=axis_bins\naxis=" << cfg.axis << "\nbins=" << roi->bins() << "\nmin_area=" << min_area
       << "\ncomponent_filter=before_projection\nconnectivity=8\n";
  std::map<std::string, std::size_t> histogram;
  for (const auto& r : rows) ++histogram[to_string(r.state.level)];
  log << "classified " << rows.size() << " frames:";
  for (const auto& [k, v] : histogram) log << ' ' << k << '=' << v;
  log << '\n';
}

void run_synth(const RunConfig& cfg, std::ostream& log) {
  const SynthConfig sc = synth_config(cfg);
  const fs::path out = cfg.out;
  ensure_dir(out / "frames");
  ensure_dir(out / "gt");
  const SynthSequence seq = generate_sequence(sc);
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    write_pgm(seq.frames[f], (out / "frames" / format_frame_path("f%04d.pgm", f)).string());
    write_mask(seq.truth[f], (out / "gt" / format_frame_path("g%04d.pgm", f)).string());
  }
  log << "wrote " << seq.frames.size() << " frames of " << sc.width << "x" << sc.height << " to "
      << (out / "frames").string() << " (pattern f%04d.pgm, ground truth gt/g%04d.pgm)\n";
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-texture moving-object detection"};
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.require_subcommand(1);
  RunConfig cfg;
  std::uint64_t seed = 0;

  app.add_option("--detector", cfg.detector, "block-texture | sigma-delta")->capture_default_str();
  app.add_option("--block-size", cfg.block_size, "block size WxH")->capture_default_str();
  app.add_option("--stride", cfg.stride, "block stride in pixels (0 = half the block)")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "learning rate")->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "detection tradeoff")->capture_default_str();
  app.add_option("--overlap-rule", cfg.overlap, "or | majority")->capture_default_str();
  app.add_option("--sd-n", cfg.sd_n, "sigma-delta amplification")->capture_default_str();
  app.add_option("--sd-vmin", cfg.sd_vmin, "sigma-delta variance floor")->capture_default_str();
  app.add_option("--frames", cfg.frames, "frame pattern (printf-style) or .y4m file");
  app.add_option("--gt", cfg.gt, "ground-truth mask pattern");
  app.add_option("--masks", cfg.masks, "precomputed mask pattern");
  app.add_option("--start", cfg.start, "first frame index")->capture_default_str();
  app.add_option("--count", cfg.count, "number of frames (0 = all available)")->capture_default_str();
  app.add_option("--frame-stride", cfg.frame_stride, "process every Nth frame")->capture_default_str();
  app.add_option("--strides", cfg.strides, "comma-separated strides for the sampling sweep");
  app.add_option("--out", cfg.out, "output directory")->capture_default_str();
  app.add_option("--resume", cfg.resume, "stationary model snapshot to resume from");
  app.add_option("--snapshot-every", cfg.snapshot_every, "write a model snapshot every N frames");
  app.add_option("--roi", cfg.roi, "ROI mask file or x,y,w,h");
  app.add_option("--axis", cfg.axis, "lane axis: x | y")->capture_default_str();
  app.add_option("--min-area", cfg.min_area, "smallest component kept (0 = one block)")->capture_default_str();
  app.add_flag("--annotate", cfg.annotate, "write annotated density masks");
  app.add_option("--seed", seed, "random seed (synth)");
  app.add_option("--width", cfg.width, "synthetic frame width")->capture_default_str();
  app.add_option("--height", cfg.height, "synthetic frame height")->capture_default_str();
  app.add_option("--noise", cfg.noise, "Gaussian noise sigma")->capture_default_str();
  app.add_option("--rect-size", cfg.rect_size, "moving rectangle WxH")->capture_default_str();
  app.add_option("--rect-pos", cfg.rect_pos, "rectangle start x,y")->capture_default_str();
  app.add_option("--rect-speed", cfg.rect_speed, "rectangle speed in px/frame")->capture_default_str();
  app.add_flag("--no-rect", cfg.no_rect, "omit the moving rectangle");
  app.add_option("--illumination", cfg.illumination, "none | ramp | step")->capture_default_str();
  app.add_option("--illumination-amount", cfg.illumination_amount, "relative gain change")->capture_default_str();
  app.add_option("--illumination-frame", cfg.illumination_frame, "onset of a step change")->capture_default_str();
  app.add_option("--oscillate", cfg.oscillate, "oscillating background region x,y,w,h");

  auto* detect = app.add_subcommand("detect", "run a detector and write per-frame masks")->fallthrough();
  auto* evaluate = app.add_subcommand("evaluate", "score masks or a detector run against ground truth")->fallthrough();
  auto* psnr = app.add_subcommand("psnr", "estimate PSNR over background-only frames")->fallthrough();
  auto* density = app.add_subcommand("density", "lane coverage and traffic density state per frame")->fallthrough();
  auto* synth = app.add_subcommand("synth", "generate a synthetic sequence with ground truth")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (app.count("--seed") > 0) cfg.seed = seed;

  try {
    if (detect->parsed()) run_detect(cfg, app.config_to_str(true, false), out);
    else if (evaluate->parsed()) run_evaluate(cfg, out);
    else if (psnr->parsed()) run_psnr(cfg, out);
    else if (density->parsed()) run_density(cfg, out);
    else if (synth->parsed()) run_synth(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace bgtex::cli
