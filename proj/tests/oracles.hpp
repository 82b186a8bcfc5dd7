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

// Independent reference implementations used only by the tests. None of
// these call into the library's kernels.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Texture vector through explicit convolution with the Haar filter pair and
// downsampling by two, in long double. Detail coefficients come out with the
// opposite sign of the pairwise form, which the energy does not see.
inline std::array<double, 5> texture(const std::array<double, 9>& patch) {
  static constexpr int offsets[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
  const long double centre = patch[4];
  long double diff[8];
  long double sq = 0;
  for (int j = 0; j < 8; ++j) {
    const int x = 1 + offsets[j][0];
    const int y = 1 + offsets[j][1];
    diff[j] = centre - static_cast<long double>(patch[y * 3 + x]);
    sq += diff[j] * diff[j];
  }
  if (sq == 0) return {0, 0, 0, 0, 0};
  const long double norm = std::sqrt(sq);
  for (auto& d : diff) d /= norm;

  const long double r = 1.0L / std::sqrt(2.0L);
  const long double g[2] = {r, r};
  const long double h[2] = {r, -r};
  // Full convolution, length 9.
  long double cg[9] = {};
  long double ch[9] = {};
  for (int k = 0; k < 9; ++k) {
    for (int i = 0; i < 8; ++i) {
      const int t = k - i;
      if (t < 0 || t > 1) continue;
      cg[k] += diff[i] * g[t];
      ch[k] += diff[i] * h[t];
    }
  }
  std::array<double, 5> z{};
  long double energy = 0;
  for (int n = 0; n < 4; ++n) {
    z[n] = static_cast<double>(cg[2 * n + 1]);
    energy += ch[2 * n + 1] * ch[2 * n + 1];
  }
  z[4] = static_cast<double>(energy);
  return z;
}

// Straight-line transcription of the three per-cell statements: update,
// likelihood against the previous model, decision.
struct CellOutcome {
  std::array<double, 5> model;
  double delta;
  int phi;
};

inline CellOutcome alg_step(const std::array<double, 5>& m_prev, const std::array<double, 5>& t, double alpha,
                            double tau) {
  CellOutcome o{};
  for (int d = 0; d < 5; ++d) {
    const double s = t[d] - m_prev[d] > 0 ? 1.0 : (t[d] - m_prev[d] < 0 ? -1.0 : 0.0);
    o.model[d] = m_prev[d] + alpha * s;
  }
  o.delta = 0;
  for (int d = 0; d < 5; ++d) o.delta += std::fabs(m_prev[d] - t[d]);
  o.phi = o.delta < tau ? 0 : 1;
  return o;
}

// Per-pixel sigma-delta over integer sequences, written out longhand.
inline std::vector<std::vector<std::uint8_t>> sigma_delta(const std::vector<std::vector<int>>& frames, int n,
                                                         int v_min) {
  const std::size_t px = frames.front().size();
  std::vector<int> m = frames.front();
  std::vector<int> v(px, v_min);
  std::vector<std::vector<std::uint8_t>> masks;
  for (std::size_t f = 1; f < frames.size(); ++f) {
    std::vector<std::uint8_t> mask(px, 0);
    for (std::size_t i = 0; i < px; ++i) {
      const int x = frames[f][i];
      if (x > m[i]) m[i] = m[i] + 1;
      else if (x < m[i]) m[i] = m[i] - 1;
      const int d = x > m[i] ? x - m[i] : m[i] - x;
      if (d != 0) {
        if (n * d > v[i]) v[i] = v[i] + 1;
        else if (n * d < v[i]) v[i] = v[i] - 1;
        if (v[i] < v_min) v[i] = v_min;
      }
      mask[i] = d >= v[i] ? 1 : 0;
    }
    masks.push_back(std::move(mask));
  }
  return masks;
}

// Iterative flood fill with 8-connectivity. Labels are assigned in raster
// order of each component's first pixel.
inline std::vector<int> flood_fill(const std::vector<std::uint8_t>& mask, int w, int h, int& count) {
  std::vector<int> labels(mask.size(), 0);
  count = 0;
  std::vector<std::pair<int, int>> stack;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask[y * w + x] || labels[y * w + x]) continue;
      ++count;
      labels[y * w + x] = count;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const auto [cx, cy] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = cx + dx;
            const int ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            if (!mask[ny * w + nx] || labels[ny * w + nx]) continue;
            labels[ny * w + nx] = count;
            stack.push_back({nx, ny});
          }
        }
      }
    }
  }
  return labels;
}

// Monte-Carlo expectation of 20 log10(range / sigma_pop) for n i.i.d.
// Gaussian samples. Scale-free, so sigma does not enter. Uses its own
// Box-Muller sampler.
inline double expected_snr_db(std::size_t n, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double two_pi = 6.283185307179586;
  std::vector<double> xs(n);
  double total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < n; i += 2) {
      const double u1 = 1.0 - u(rng);
      const double u2 = u(rng);
      const double r = std::sqrt(-2.0 * std::log(u1));
      xs[i] = r * std::cos(two_pi * u2);
      if (i + 1 < n) xs[i + 1] = r * std::sin(two_pi * u2);
    }
    double lo = xs[0], hi = xs[0], mean = 0.0;
    for (double x : xs) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      mean += x;
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n);
    total += 20.0 * std::log10((hi - lo) / std::sqrt(var));
  }
  return total / static_cast<double>(trials);
}

}  // namespace oracle
