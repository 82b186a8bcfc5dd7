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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bgtex/background_model.hpp"
#include "bgtex/density.hpp"
#include "bgtex/detector.hpp"
#include "bgtex/metrics.hpp"
#include "bgtex/sigma_delta.hpp"
#include "bgtex/synth.hpp"
#include "bgtex/texture.hpp"
#include "oracles.hpp"

using namespace bgtex;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) { return std::chrono::duration<double>(clk::now() - t0).count(); }

Patch random_patch(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 255.0);
  Patch p;
  do {
    for (auto& v : p) v = u(rng);
  } while (std::all_of(p.begin(), p.end(), [&](double v) { return v == p[4]; }));
  return p;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome energy_conservation() {
  const auto t0 = clk::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const auto z = texture_vector(random_patch(rng));
    double e = z.e_h;
    for (double g : z.g) e += g * g;
    worst = std::max(worst, std::fabs(e - 1.0));
  }
  const double t = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |energy-1| = %.3g, %.3f s", worst, t);
  return {worst <= 1e-9 && t < 5.0, buf};
}

double max_diff(const Vec5& a, const Vec5& b) {
  double d = 0.0;
  for (int k = 0; k < kTextureDims; ++k) d = std::max(d, std::fabs(a[k] - b[k]));
  return d;
}

Outcome illumination_invariance() {
  std::mt19937_64 rng(202);
  double worst_offset = 0.0;
  double worst_scale = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Patch p = random_patch(rng);
    const Vec5 z = texture_vector(p).components();
    for (int c = -50; c <= 50; ++c) {
      if (c == 0) continue;
      Patch q = p;
      for (auto& v : q) v += c;
      worst_offset = std::max(worst_offset, max_diff(z, texture_vector(q).components()));
    }
    for (double k : {0.5, 2.0, 10.0}) {
      Patch q = p;
      for (auto& v : q) v *= k;
      worst_scale = std::max(worst_scale, max_diff(z, texture_vector(q).components()));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "offset %.3g, scale %.3g", worst_offset, worst_scale);
  return {worst_offset <= 1e-12 && worst_scale <= 1e-9, buf};
}

Outcome step_semantics() {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    StationaryModel model;
    model.spec = BlockGridSpec{8, 8, 4, 4, 1, 1};
    model.frame_count = 1;
    BlockTextureGrid t;
    t.spec = model.spec;
    Vec5 m{}, x{};
    for (int d = 0; d < kTextureDims; ++d) {
      m[d] = comp(rng);
      x[d] = unit(rng) < 0.2 ? m[d] : comp(rng);  // exercise the zero sign
    }
    model.m = {m};
    t.cells = {x};
    DetectorParams params;
    params.alpha = unit(rng) * 0.2;
    params.lambda = unit(rng);
    const double tau = params.tau();
    const auto map = step(model, t, params);
    const auto ref = oracle::alg_step(m, x, params.alpha, tau);
    if (model.m[0] != ref.model || map.delta[0] != ref.delta || map.phi[0] != ref.phi) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches of 10000"};
}

Outcome tradeoff_extremes() {
  SynthConfig sc;
  sc.seed = 404;
  sc.rect = false;
  const auto seq = generate_sequence(sc);
  double frac_one = 1.0;
  double frac_zero = 0.0;
  for (double lambda : {1.0, 0.0}) {
    DetectorConfig cfg;
    cfg.params.lambda = lambda;
    Detector det(cfg);
    for (std::size_t f = 0; f < seq.frames.size(); ++f) {
      det.process(seq.frames[f]);
      if (f == 0) continue;
      const auto& map = *det.last_motion_map();
      const double frac = static_cast<double>(map.moving_blocks()) / map.spec.cells();
      if (lambda == 1.0) frac_one = std::min(frac_one, frac);
      else frac_zero = std::max(frac_zero, frac);
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "lambda=1 min flagged %.3f, lambda=0 max flagged %.3f", frac_one, frac_zero);
  return {frac_one == 1.0 && frac_zero == 0.0, buf};
}

Outcome convergence() {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);
  std::size_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = std::array{0.01, 0.05, 0.1}[trial % 3];
    StationaryModel model;
    model.spec = BlockGridSpec{8, 8, 4, 4, 6, 5};
    model.frame_count = 1;
    BlockTextureGrid t;
    t.spec = model.spec;
    double gap = 0.0;
    for (std::size_t c = 0; c < model.spec.cells(); ++c) {
      Vec5 m{}, x{};
      for (int d = 0; d < kTextureDims; ++d) {
        m[d] = comp(rng);
        x[d] = comp(rng);
        gap = std::max(gap, std::fabs(m[d] - x[d]));
      }
      model.m.push_back(m);
      t.cells.push_back(x);
    }
    DetectorParams params;
    params.alpha = alpha;
    const auto bound = static_cast<std::size_t>(std::ceil(gap / alpha));
    for (std::size_t f = 0; f < bound; ++f) step(model, t, params);
    double dist = 0.0;
    for (std::size_t c = 0; c < model.m.size(); ++c) dist = std::max(dist, max_diff(model.m[c], t.cells[c]));
    if (dist > alpha) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " of 200 grids outside alpha after the bound"};
}

SynthConfig moving_rect_config() {
  SynthConfig sc;
  sc.width = 256;
  sc.height = 120;
  sc.frames = 101;
  sc.seed = 606;
  sc.noise_sigma = 2.0;
  sc.rect_w = 24;
  sc.rect_h = 24;
  sc.rect_x0 = 8;
  sc.rect_y0 = 48;
  sc.speed_x = 2.0;
  return sc;
}

Outcome detection_quality() {
  const auto seq = generate_sequence(moving_rect_config());
  const auto t0 = clk::now();
  Detector det(DetectorConfig{});
  double p_sum = 0.0, r_sum = 0.0;
  std::size_t n = 0;
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    const auto mask = det.process(seq.frames[f]);
    if (f < 25) continue;
    const auto pr = precision_recall(confusion(mask, seq.truth[f]));
    p_sum += pr.precision;
    r_sum += pr.recall;
    ++n;
  }
  const double t = seconds_since(t0);
  const double p = p_sum / n, r = r_sum / n;
  char buf[160];
  std::snprintf(buf, sizeof buf, "precision %.3f, recall %.3f over %zu frames, %.3f s", p, r, n, t);
  return {p >= 0.80 && r >= 0.80 && t < 10.0, buf};
}

Outcome sampling_consistency() {
  const auto synth = generate_sequence(moving_rect_config());
  EvaluationSequence seq;
  seq.frames = synth.frames;
  for (std::size_t f = 0; f < synth.truth.size(); ++f) seq.truth.emplace(f, synth.truth[f]);
  const std::vector<std::size_t> strides{1, 2, 5, 10};
  const auto sweep = sampling_sweep(std::span(&seq, 1), DetectorConfig{}, strides);
  double lo = 1.0, hi = 0.0;
  std::string detail;
  for (const auto& r : sweep) {
    lo = std::min(lo, r.mean);
    hi = std::max(hi, r.mean);
    char buf[48];
    std::snprintf(buf, sizeof buf, "s%zu=%.4f ", r.stride, r.mean);
    detail += buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "spread %.4f", hi - lo);
  return {hi - lo < 0.05, detail + buf};
}

Outcome sigma_delta_equality() {
  std::mt19937_64 rng(808);
  std::size_t mismatched = 0;
  for (int s = 0; s < 100; ++s) {
    std::uniform_int_distribution<int> base(0, 255);
    std::uniform_int_distribution<int> jitter(-12, 12);
    std::uniform_int_distribution<int> any(0, 255);
    std::vector<std::vector<int>> ints(50, std::vector<int>(256));
    std::vector<int> scene(256);
    for (auto& v : scene) v = base(rng);
    for (auto& f : ints) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = (rng() % 10 == 0) ? any(rng) : std::clamp(scene[i] + jitter(rng), 0, 255);
      }
    }
    const auto expected = oracle::sigma_delta(ints, 4, 2);
    std::vector<Frame> frames;
    for (const auto& f : ints) {
      Frame fr(16, 16);
      std::copy(f.begin(), f.end(), fr.data.begin());
      frames.push_back(fr);
    }
    SDState st = sd_init(frames[0]);
    for (std::size_t f = 1; f < frames.size(); ++f) {
      if (sd_step(st, frames[f]).data != expected[f - 1]) {
        ++mismatched;
        break;
      }
    }
  }
  return {mismatched == 0, std::to_string(mismatched) + " of 100 sequences differ"};
}

Outcome psnr_estimator() {
  SynthConfig sc;
  sc.width = 48;
  sc.height = 48;
  sc.frames = 300;
  sc.seed = 909;
  sc.rect = false;
  const auto seq = generate_sequence(sc);
  const double measured = video_psnr(seq.frames).psnr;
  const double expected = oracle::expected_snr_db(300, 20000, 910);
  char buf[96];
  std::snprintf(buf, sizeof buf, "measured %.3f dB, expected %.3f dB", measured, expected);
  return {std::fabs(measured - expected) <= 0.5, buf};
}

Outcome components_and_density() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t mismatched = 0;
  for (int i = 0; i < 10000; ++i) {
    const double fill = 0.1 + 0.6 * u(rng);
    BinaryMask m(32, 32);
    for (auto& v : m.data) v = u(rng) < fill ? 1 : 0;
    int count = 0;
    const auto expected = oracle::flood_fill(m.data, 32, 32, count);
    const auto got = label_components(m);
    if (got.count != count || got.labels != expected) ++mismatched;
  }
  const bool states = classify(0.04).level == DensityLevel::Empty && classify(0.20).level == DensityLevel::Low &&
                      classify(0.50).level == DensityLevel::High && classify(0.95).level == DensityLevel::Full;
  return {mismatched == 0 && states,
          std::to_string(mismatched) + " of 10000 labelings differ; state examples " + (states ? "hold" : "fail")};
}

Outcome throughput() {
  SynthConfig sc;
  sc.width = 320;
  sc.height = 240;
  sc.frames = 150;
  sc.seed = 1111;
  sc.rect_y0 = 100;
  const auto seq = generate_sequence(sc);
  Detector det(DetectorConfig{});
  const auto t0 = clk::now();
  for (const auto& f : seq.frames) det.process(f);
  const double fps = seq.frames.size() / seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f fps", fps);
  return {fps >= 25.0, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"energy conservation", energy_conservation},
      {"illumination invariance", illumination_invariance},
      {"model step semantics", step_semantics},
      {"tradeoff extremes", tradeoff_extremes},
      {"model convergence", convergence},
      {"synthetic detection quality", detection_quality},
      {"sampling-rate consistency", sampling_consistency},
      {"sigma-delta baseline", sigma_delta_equality},
      {"psnr estimator", psnr_estimator},
      {"connected components and density states", components_and_density},
      {"throughput 320x240", throughput},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
