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

// Wall-clock comparison of the OpenMP kernels against their serial
// references. Usage: bench_kernels [width height frames]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bgtex/background_model.hpp"
#include "bgtex/pixel_mask.hpp"
#include "bgtex/sigma_delta.hpp"
#include "bgtex/synth.hpp"
#include "bgtex/texture.hpp"

using namespace bgtex;

namespace {

double time_ms(const std::function<void()>& body, int reps) {
  body();  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-16s %10.3f %10.3f %8.2fx\n", name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  SynthConfig sc;
  sc.width = argc > 1 ? std::atoi(argv[1]) : 640;
  sc.height = argc > 2 ? std::atoi(argv[2]) : 480;
  sc.frames = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 20;
  sc.seed = 7;
  sc.rect_y0 = sc.height / 2;
  const auto seq = generate_sequence(sc);
  const auto spec = make_grid_spec(sc.width, sc.height, 8, 8, 4, 4);
  const DetectorParams params;

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("%dx%d, %zu frames, %d threads\n", sc.width, sc.height, seq.frames.size(), threads);
  std::printf("%-16s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  std::size_t sink = 0;
  auto all_frames = [&](auto&& fn) {
    return [&, fn] {
      for (const auto& f : seq.frames) fn(f);
    };
  };

  report("block_textures",
         time_ms(all_frames([&](const Frame& f) { sink += serial::block_textures(f, spec).cells.size(); }), 3),
         time_ms(all_frames([&](const Frame& f) { sink += block_textures(f, spec).cells.size(); }), 3));

  std::vector<BlockTextureGrid> grids;
  for (const auto& f : seq.frames) grids.push_back(block_textures(f, spec));
  auto run_steps = [&](auto step_fn) {
    return [&, step_fn] {
      StationaryModel model = init_model(grids.front());
      for (std::size_t i = 1; i < grids.size(); ++i) sink += step_fn(model, grids[i], params).moving_blocks();
    };
  };
  report("model step",
         time_ms(run_steps([](StationaryModel& m, const BlockTextureGrid& t, const DetectorParams& p) {
                   return serial::step(m, t, p);
                 }), 20),
         time_ms(run_steps([](StationaryModel& m, const BlockTextureGrid& t, const DetectorParams& p) {
                   return step(m, t, p);
                 }), 20));

  StationaryModel model = init_model(grids.front());
  const MotionMap map = step(model, grids.back(), DetectorParams{0.05, 1.0});
  report("rasterize",
         time_ms([&] { sink += serial::rasterize(map, sc.width, sc.height).popcount(); }, 50),
         time_ms([&] { sink += rasterize(map, sc.width, sc.height).popcount(); }, 50));

  auto run_sd = [&](auto sd_fn) {
    return [&, sd_fn] {
      SDState st = sd_init(seq.frames.front());
      for (std::size_t i = 1; i < seq.frames.size(); ++i) sink += sd_fn(st, seq.frames[i]).popcount();
    };
  };
  report("sigma-delta",
         time_ms(run_sd([](SDState& s, const Frame& f) { return serial::sd_step(s, f); }), 5),
         time_ms(run_sd([](SDState& s, const Frame& f) { return sd_step(s, f); }), 5));

  std::printf("(checksum %zu)\n", sink);
  return 0;
}
