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

#include <random>

#include "bgtex/pixel_mask.hpp"
#include "doctest.h"

using namespace bgtex;

namespace {

MotionMap map_for(const BlockGridSpec& spec, std::uint8_t fill = 0) {
  MotionMap m;
  m.spec = spec;
  m.phi.assign(spec.cells(), fill);
  m.delta.assign(spec.cells(), 0.0);
  return m;
}

}  // namespace

TEST_CASE("rasterize basics") {
  const auto tiles = make_grid_spec(50, 40, 12, 12, 12, 12);  // 4x3 blocks, 2/4 px uncovered
  CHECK(rasterize(map_for(tiles), 50, 40).popcount() == 0);

  const PixelMask full = rasterize(map_for(tiles, 1), 50, 40);
  CHECK(full.popcount() == 48u * 36u);
  CHECK(full.at(47, 35) == 1);
  CHECK(full.at(48, 10) == 0);
  CHECK(full.at(10, 36) == 0);

  auto one = map_for(tiles);
  one.phi[0] = 1;
  const PixelMask m = rasterize(one, 50, 40);
  CHECK(m.popcount() == 144u);
  for (int y = 0; y < 12; ++y)
    for (int x = 0; x < 12; ++x) CHECK(m.at(x, y) == 1);
}

TEST_CASE("non-overlapping popcount is 144 per moving block") {
  const auto tiles = make_grid_spec(120, 96, 12, 12, 12, 12);
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 20; ++trial) {
    auto map = map_for(tiles);
    for (auto& p : map.phi) p = coin(rng) ? 1 : 0;
    CHECK(rasterize(map, 120, 96).popcount() == 144u * map.moving_blocks());
  }
}

TEST_CASE("overlap rules") {
  const auto spec = make_grid_spec(16, 8, 8, 8, 4, 4);  // 3 columns, 1 row
  auto map = map_for(spec);
  map.phi[1] = 1;  // covers x in [4, 12)
  const PixelMask any = rasterize(map, 16, 8, OverlapRule::Any);
  CHECK(any.popcount() == 8u * 8u);
  // x in [4, 8) is covered by blocks 0 and 1: one vote of two is not a majority.
  const PixelMask maj = rasterize(map, 16, 8, OverlapRule::Majority);
  CHECK(maj.popcount() == 0u);
  map.phi[0] = 1;
  const PixelMask maj2 = rasterize(map, 16, 8, OverlapRule::Majority);
  CHECK(maj2.at(0, 0) == 1);
  CHECK(maj2.at(5, 0) == 1);
  CHECK(maj2.at(9, 0) == 0);

  CHECK(parse_overlap_rule("or") == OverlapRule::Any);
  CHECK(parse_overlap_rule("majority") == OverlapRule::Majority);
  CHECK_THROWS_AS(parse_overlap_rule("vote"), ConfigError);
}

TEST_CASE("adding a moving block never clears a pixel") {
  const auto spec = make_grid_spec(64, 48, 8, 8, 4, 4);
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.2);
  std::uniform_int_distribution<std::size_t> pick(0, spec.cells() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    auto map = map_for(spec);
    for (auto& p : map.phi) p = coin(rng) ? 1 : 0;
    const PixelMask before = rasterize(map, 64, 48);
    map.phi[pick(rng)] = 1;
    const PixelMask after = rasterize(map, 64, 48);
    for (std::size_t i = 0; i < before.size(); ++i) REQUIRE(after.data[i] >= before.data[i]);
  }
}

TEST_CASE("grid that does not fit the frame") {
  const auto spec = make_grid_spec(64, 48, 8, 8, 4, 4);
  CHECK_THROWS_AS(rasterize(map_for(spec), 32, 48), std::invalid_argument);
}
