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

#include "bgtex/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace bgtex {
namespace {

class DisjointSets {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Labeling label_components(const BinaryMask& mask) {
  const int w = mask.width;
  const int h = mask.height;
  Labeling out;
  out.width = w;
  out.height = h;
  out.labels.assign(mask.size(), 0);

  // First pass: provisional labels from the already-visited W, NW, N, NE neighbours.
  DisjointSets sets;
  sets.make();  // 0 is background
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      int label = 0;
      const int nb[4][2] = {{x - 1, y}, {x - 1, y - 1}, {x, y - 1}, {x + 1, y - 1}};
      for (const auto& p : nb) {
        if (p[0] < 0 || p[1] < 0 || p[0] >= w) continue;
        const int l = out.labels[static_cast<std::size_t>(p[1]) * w + p[0]];
        if (l == 0) continue;
        if (label == 0) label = l;
        else sets.unite(label, l);
      }
      if (label == 0) label = sets.make();
      out.labels[static_cast<std::size_t>(y) * w + x] = label;
    }
  }

  // Second pass: resolve equivalences and renumber densely in scan order.
  std::vector<int> dense;
  for (int& l : out.labels) {
    if (l == 0) continue;
    const int root = sets.find(l);
    if (static_cast<std::size_t>(root) >= dense.size()) dense.resize(static_cast<std::size_t>(root) + 1, 0);
    if (dense[root] == 0) {
      dense[root] = ++out.count;
      out.areas.push_back(0);
    }
    l = dense[root];
    ++out.areas[static_cast<std::size_t>(l - 1)];
  }
  return out;
}

LaneAxis parse_lane_axis(const std::string& name) {
  if (name == "x") return LaneAxis::X;
  if (name == "y") return LaneAxis::Y;
  throw ConfigError("unknown lane axis '" + name + "' (expected x|y)");
}

Roi::Roi(BinaryMask region, LaneAxis axis) : region_(std::move(region)), axis_(axis) {
  const int extent = axis_ == LaneAxis::Y ? region_.height : region_.width;
  std::vector<bool> hit(static_cast<std::size_t>(std::max(extent, 0)), false);
  for (int y = 0; y < region_.height; ++y) {
    for (int x = 0; x < region_.width; ++x) {
      if (region_.at(x, y)) hit[static_cast<std::size_t>(axis_ == LaneAxis::Y ? y : x)] = true;
    }
  }
  bin_index_.assign(hit.size(), -1);
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) bin_index_[i] = static_cast<int>(bin_count_++);
  }
  if (bin_count_ == 0) throw std::invalid_argument("region of interest is empty");
}

Roi Roi::rectangle(int frame_w, int frame_h, int x, int y, int w, int h, LaneAxis axis) {
  BinaryMask region(frame_w, frame_h);
  for (int yy = std::max(y, 0); yy < std::min(y + h, frame_h); ++yy) {
    for (int xx = std::max(x, 0); xx < std::min(x + w, frame_w); ++xx) region.at(xx, yy) = 1;
  }
  return Roi(std::move(region), axis);
}

double lane_coverage(const Labeling& regions, const Roi& roi, std::size_t min_area) {
  const BinaryMask& r = roi.region();
  if (regions.width != r.width || regions.height != r.height) {
    throw std::invalid_argument("labelled mask and region of interest differ in size");
  }
  std::vector<bool> occupied(roi.bins(), false);
  for (int y = 0; y < r.height; ++y) {
    for (int x = 0; x < r.width; ++x) {
      const int l = regions.at(x, y);
      if (l == 0 || !r.at(x, y) || regions.areas[static_cast<std::size_t>(l - 1)] < min_area) continue;
      occupied[static_cast<std::size_t>(roi.bin_of(roi.axis() == LaneAxis::Y ? y : x))] = true;
    }
  }
  const auto n = std::count(occupied.begin(), occupied.end(), true);
  return static_cast<double>(n) / static_cast<double>(roi.bins());
}

DensityState classify(double coverage) {
  DensityState s;
  s.coverage = coverage;
  if (coverage < 0.05) s.level = DensityLevel::Empty;
  else if (coverage < 0.30) s.level = DensityLevel::Low;
  else if (coverage < 0.90) s.level = DensityLevel::High;
  else s.level = DensityLevel::Full;
  return s;
}

std::string to_string(DensityLevel level) {
  switch (level) {
    case DensityLevel::Empty: return "Empty";
    case DensityLevel::Low: return "Low";
    case DensityLevel::High: return "High";
    case DensityLevel::Full: return "Full";
  }
  return "?";
}

void write_density_csv(std::ostream& out, const std::vector<DensityRow>& rows) {
  out << "frame_index,coverage,state\n";
  char buf[32];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.state.coverage);
    out << r.frame << ',' << buf << ',' << to_string(r.state.level) << '\n';
  }
}

Frame annotate_density(const BinaryMask& mask, const Roi& roi, double coverage) {
  Frame out(mask.width, mask.height);
  for (std::size_t i = 0; i < mask.size(); ++i) out.data[i] = mask.data[i] ? 255.0 : 0.0;
  const BinaryMask& r = roi.region();
  for (int y = 0; y < r.height; ++y) {
    for (int x = 0; x < r.width; ++x) {
      if (!r.at(x, y)) continue;
      const bool edge = x == 0 || y == 0 || x == r.width - 1 || y == r.height - 1 || !r.at(x - 1, y) ||
                        !r.at(x + 1, y) || !r.at(x, y - 1) || !r.at(x, y + 1);
      if (edge) out.at(x, y) = 128.0;
    }
  }
  const int bar_w = std::max(1, mask.width / 40);
  const int filled = static_cast<int>(std::lround(std::clamp(coverage, 0.0, 1.0) * mask.height));
  for (int y = mask.height - filled; y < mask.height; ++y) {
    for (int x = mask.width - bar_w; x < mask.width; ++x) out.at(x, y) = 255.0;
  }
  return out;
}

}  // namespace bgtex
